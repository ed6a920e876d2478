#pragma once

#include <cstddef>
#include <vector>

#include "arithdyn/rational.hpp"

namespace arithdyn {

/// Dense matrix with exact rational entries.
class ExactMatrix {
 public:
  ExactMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

 private:
  std::size_t rows_, cols_;
  std::vector<Rational> data_;
};

/// Exact basis of the right nullspace, computed by fraction-free (Bareiss)
/// elimination on the integer-scaled matrix. Basis vectors are primitive
/// integer vectors with positive first nonzero entry, ordered by the free
/// column they correspond to. Empty result means full column rank.
std::vector<std::vector<Rational>> nullspace(const ExactMatrix& m);

/// Rank over the rationals (byproduct of the same elimination).
std::size_t exact_rank(const ExactMatrix& m);

}  // namespace arithdyn

#include "arithdyn/matrix.hpp"

#include <algorithm>

#include "arithdyn/error.hpp"

namespace arithdyn {

namespace {

struct Echelon {
  // Integer row-echelon form (fraction-free), rows reordered in place.
  std::vector<std::vector<Integer>> rows;
  std::vector<std::size_t> pivot_cols;
};

// Bareiss elimination: every intermediate entry is a minor of the scaled
// integer matrix, and the division by the previous pivot is exact.
Echelon echelon_form(const ExactMatrix& m) {
  const std::size_t nr = m.rows(), nc = m.cols();
  std::vector<std::vector<Integer>> a(nr, std::vector<Integer>(nc));
  for (std::size_t r = 0; r < nr; ++r) {
    Integer den_lcm(1);
    for (std::size_t c = 0; c < nc; ++c) {
      den_lcm = lcm(den_lcm, Integer(m.at(r, c).get_den()));
    }
    for (std::size_t c = 0; c < nc; ++c) {
      Rational scaled = m.at(r, c) * Rational(den_lcm);
      a[r][c] = Integer(scaled.get_num());
    }
  }

  Echelon e;
  Integer prev(1);
  std::size_t row = 0;
  for (std::size_t col = 0; col < nc && row < nr; ++col) {
    std::size_t pivot = row;
    while (pivot < nr && a[pivot][col] == 0) ++pivot;
    if (pivot == nr) continue;
    std::swap(a[row], a[pivot]);
    for (std::size_t r = row + 1; r < nr; ++r) {
      for (std::size_t c = col + 1; c < nc; ++c) {
        Integer t = a[row][col] * a[r][c] - a[r][col] * a[row][c];
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        a[r][c] = std::move(t);
      }
      a[r][col] = 0;
    }
    prev = a[row][col];
    e.pivot_cols.push_back(col);
    ++row;
  }
  a.resize(row);
  e.rows = std::move(a);
  return e;
}

}  // namespace

std::size_t exact_rank(const ExactMatrix& m) { return echelon_form(m).pivot_cols.size(); }

std::vector<std::vector<Rational>> nullspace(const ExactMatrix& m) {
  const std::size_t nc = m.cols();
  Echelon e = echelon_form(m);
  const std::size_t rank = e.pivot_cols.size();

  std::vector<bool> is_pivot(nc, false);
  for (auto c : e.pivot_cols) is_pivot[c] = true;

  std::vector<std::vector<Rational>> basis;
  for (std::size_t fc = 0; fc < nc; ++fc) {
    if (is_pivot[fc]) continue;
    std::vector<Rational> v(nc, Rational(0));
    v[fc] = 1;
    for (std::size_t i = rank; i-- > 0;) {
      const std::size_t pc = e.pivot_cols[i];
      Rational s(0);
      for (std::size_t c = pc + 1; c < nc; ++c) {
        if (v[c] != 0) s += Rational(e.rows[i][c]) * v[c];
      }
      v[pc] = -s / Rational(e.rows[i][pc]);
    }
    // Normalize to a primitive integer vector with positive first entry.
    Integer den_lcm(1), num_gcd(0);
    for (const auto& x : v) den_lcm = lcm(den_lcm, Integer(x.get_den()));
    for (auto& x : v) x *= Rational(den_lcm);
    for (const auto& x : v) num_gcd = gcd(num_gcd, Integer(x.get_num()));
    if (num_gcd != 0) {
      for (auto& x : v) x /= Rational(num_gcd);
    }
    for (const auto& x : v) {
      if (x != 0) {
        if (x < 0) {
          for (auto& y : v) y = -y;
        }
        break;
      }
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace arithdyn

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "arithdyn/matrix.hpp"
#include "arithdyn/multipoly.hpp"

namespace arithdyn {

/// Sparse polynomial over the prime field F_p, carried as machine residues.
struct PolyModP {
  std::uint64_t p = 0;
  VarListPtr vars;
  std::map<Exponents, std::uint64_t, GradedLexLess> terms;

  std::uint64_t eval(const std::vector<std::uint64_t>& point) const;
  bool is_zero() const { return terms.empty(); }
};

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p);
std::uint64_t invmod(std::uint64_t a, std::uint64_t p);

bool is_prime_u64(std::uint64_t n);

/// Coefficientwise reduction of p mod the given prime. The prime must be a
/// "good prime": it divides no coefficient denominator. Violations raise an
/// error naming the offending coefficient.
PolyModP poly_mod_p(const MultiPoly& poly, std::uint64_t prime);

/// Rank of m over F_p, or nullopt when some denominator vanishes mod p.
/// A rank equal to cols certifies full column rank over the rationals,
/// because a nonzero maximal minor mod p is a nonzero integer minor.
std::optional<std::size_t> rank_mod_p(const ExactMatrix& m, std::uint64_t p);

/// Rank of a residue matrix over F_p (rows of equal length).
std::size_t rank_mod_p_raw(std::vector<std::vector<std::uint64_t>> rows, std::uint64_t p);

/// Residue of an integer / rational mod p; nullopt when the denominator
/// vanishes mod p.
std::uint64_t residue_mod_p(const Integer& z, std::uint64_t p);
std::optional<std::uint64_t> residue_mod_p(const Rational& q, std::uint64_t p);

}  // namespace arithdyn

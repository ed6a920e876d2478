#include "arithdyn/modp.hpp"

#include <algorithm>

#include "arithdyn/error.hpp"

namespace arithdyn {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e > 0) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p) {
  // p prime; Fermat.
  return powmod(a % p, p - 2, p);
}

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull}) {
    if (n % q == 0) return n == q;
  }
  // Deterministic Miller-Rabin for 64-bit inputs.
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::uint64_t residue_mod_p(const Integer& z, std::uint64_t p) {
  Integer r;
  mpz_mod_ui(r.get_mpz_t(), z.get_mpz_t(), p);
  return r.get_ui();
}

std::optional<std::uint64_t> residue_mod_p(const Rational& q, std::uint64_t p) {
  const std::uint64_t den = residue_mod_p(Integer(q.get_den()), p);
  if (den == 0) return std::nullopt;
  const std::uint64_t num = residue_mod_p(Integer(q.get_num()), p);
  return mulmod(num, invmod(den, p), p);
}

std::uint64_t PolyModP::eval(const std::vector<std::uint64_t>& point) const {
  std::uint64_t acc = 0;
  for (const auto& [e, c] : terms) {
    std::uint64_t t = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] > 0) t = mulmod(t, powmod(point[i], e[i], p), p);
    }
    acc = (acc + t) % p;
  }
  return acc;
}

PolyModP poly_mod_p(const MultiPoly& poly, std::uint64_t prime) {
  if (!is_prime_u64(prime)) {
    fail(ErrorKind::Parameter, "modulus " + std::to_string(prime) + " is not prime");
  }
  PolyModP out;
  out.p = prime;
  out.vars = poly.vars();
  for (const auto& [e, c] : poly.terms()) {
    auto r = residue_mod_p(c, prime);
    if (!r) {
      fail(ErrorKind::Parameter, "prime " + std::to_string(prime) +
                                     " divides the denominator of coefficient " + c.get_str());
    }
    if (*r != 0) out.terms.emplace(e, *r);
  }
  return out;
}

std::size_t rank_mod_p_raw(std::vector<std::vector<std::uint64_t>> a, std::uint64_t p) {
  const std::size_t nr = a.size();
  const std::size_t nc = nr == 0 ? 0 : a.front().size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < nc && rank < nr; ++col) {
    std::size_t pivot = rank;
    while (pivot < nr && a[pivot][col] == 0) ++pivot;
    if (pivot == nr) continue;
    std::swap(a[rank], a[pivot]);
    const std::uint64_t inv = invmod(a[rank][col], p);
    for (std::size_t r = rank + 1; r < nr; ++r) {
      if (a[r][col] == 0) continue;
      const std::uint64_t f = mulmod(a[r][col], inv, p);
      for (std::size_t c = col; c < nc; ++c) {
        a[r][c] = (a[r][c] + p - mulmod(f, a[rank][c], p)) % p;
      }
    }
    ++rank;
  }
  return rank;
}

std::optional<std::size_t> rank_mod_p(const ExactMatrix& m, std::uint64_t p) {
  const std::size_t nr = m.rows(), nc = m.cols();
  std::vector<std::vector<std::uint64_t>> a(nr, std::vector<std::uint64_t>(nc));
  for (std::size_t r = 0; r < nr; ++r) {
    for (std::size_t c = 0; c < nc; ++c) {
      auto res = residue_mod_p(m.at(r, c), p);
      if (!res) return std::nullopt;
      a[r][c] = *res;
    }
  }
  return rank_mod_p_raw(std::move(a), p);
}

}  // namespace arithdyn

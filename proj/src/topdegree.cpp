#include "arithdyn/topdegree.hpp"

#include <algorithm>
#include <random>

#include "arithdyn/error.hpp"
#include "arithdyn/modp.hpp"

namespace arithdyn {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

bool is_good_prime(const AffinePolyMap& f, std::uint64_t p) {
  for (const auto& comp : f.components()) {
    bool nonzero = false;
    for (const auto& [e, c] : comp.terms()) {
      Integer den(c.get_den());
      if (mpz_fdiv_ui(den.get_mpz_t(), p) == 0) return false;
      Integer num(c.get_num());
      if (mpz_fdiv_ui(num.get_mpz_t(), p) != 0) nonzero = true;
    }
    if (!comp.is_zero() && !nonzero) return false;  // component collapses mod p
  }
  return true;
}

}  // namespace

Integer abs_det(const std::vector<std::vector<std::int64_t>>& m) {
  const std::size_t n = m.size();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = Rational(static_cast<long>(m[i][j]));
  }
  Rational det(1);
  for (std::size_t col = 0, row = 0; col < n && row < n; ++col, ++row) {
    std::size_t pivot = row;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) return Integer(0);
    if (pivot != row) {
      std::swap(a[pivot], a[row]);
      det = -det;
    }
    det *= a[row][col];
    for (std::size_t r = row + 1; r < n; ++r) {
      if (a[r][col] == 0) continue;
      Rational factor = a[r][col] / a[row][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= factor * a[row][c];
    }
  }
  Rational d = det < 0 ? Rational(-det) : det;
  return Integer(d.get_num());
}

TopDegreeEstimate topological_degree(const AffinePolyMap& f,
                                     const std::optional<AffinePolyMap>& f_inverse,
                                     const TopDegreeOptions& options) {
  TopDegreeEstimate est;

  if (!options.force_sampling) {
    if (auto m = f.monomial_matrix()) {
      Integer d = abs_det(*m);
      if (d == 0) {
        fail(ErrorKind::Parameter, "monomial map with zero determinant is not dominant");
      }
      est.method = TopDegreeEstimate::Method::ExactMonomial;
      est.value = d.get_si();
      est.exact = true;
      return est;
    }
    if (f_inverse && inverse_check(f, *f_inverse)) {
      est.method = TopDegreeEstimate::Method::BirationalUnit;
      est.value = 1;
      est.exact = true;
      return est;
    }
  }

  const std::size_t n = f.dimension();
  if (n > 2) {
    fail(ErrorKind::Unsupported,
         "exhaustive fiber sampling is limited to dimension <= 2; provide an inverse or a "
         "monomial model for higher dimensions");
  }
  est.method = TopDegreeEstimate::Method::FiberSampling;
  est.exact = false;

  // Bezout bound d^N caps every honest fiber of a dominant map.
  Integer bezout(1);
  for (std::size_t i = 0; i < n; ++i) bezout *= Integer(f.max_degree());

  // Deterministic prime selection: walk odd numbers from a seeded start.
  std::vector<std::uint64_t> primes;
  std::uint64_t cursor =
      options.prime_min + splitmix64(options.seed) % (options.prime_cap - options.prime_min + 1);
  std::uint64_t wrapped = 0;
  while (primes.size() < static_cast<std::size_t>(options.prime_count)) {
    if (cursor > options.prime_cap) {
      cursor = options.prime_min;
      if (++wrapped > 1) break;  // range exhausted
    }
    if (is_prime_u64(cursor) && is_good_prime(f, cursor) &&
        std::find(primes.begin(), primes.end(), cursor) == primes.end()) {
      primes.push_back(cursor);
    }
    ++cursor;
  }
  if (primes.empty()) {
    fail(ErrorKind::Resource, "no good prime for fiber sampling in the configured range");
  }

  for (std::uint64_t p : primes) {
    std::vector<PolyModP> comps;
    comps.reserve(n);
    for (const auto& c : f.components()) comps.push_back(poly_mod_p(c, p));

    for (int s = 0; s < options.samples_per_prime; ++s) {
      // Seed-split per (prime, sample index): results do not depend on any
      // scheduling order.
      std::mt19937_64 rng(splitmix64(options.seed ^ splitmix64(p) ^ splitmix64(s + 1)));
      std::uniform_int_distribution<std::uint64_t> coord(1, p - 1);
      std::vector<std::uint64_t> source(n);
      for (auto& v : source) v = coord(rng);
      // Sampling targets from the image keeps fibers nonempty and generic.
      std::vector<std::uint64_t> target(n);
      for (std::size_t i = 0; i < n; ++i) target[i] = comps[i].eval(source);

      std::int64_t count = 0;
      std::vector<std::uint64_t> probe(n, 0);
      for (;;) {
        bool hit = true;
        for (std::size_t i = 0; i < n && hit; ++i) {
          hit = comps[i].eval(probe) == target[i];
        }
        if (hit) ++count;
        std::size_t k = 0;
        while (k < n && ++probe[k] == p) {
          probe[k] = 0;
          ++k;
        }
        if (k == n) break;
      }
      est.samples.push_back(FiberSample{p, target, count});
      est.value = std::max(est.value, count);
      if (Integer(count) > bezout) est.suspect_not_dominant = true;
    }
  }
  return est;
}

std::string method_name(TopDegreeEstimate::Method m) {
  switch (m) {
    case TopDegreeEstimate::Method::ExactMonomial: return "exact-monomial";
    case TopDegreeEstimate::Method::BirationalUnit: return "birational-unit";
    case TopDegreeEstimate::Method::FiberSampling: return "fiber-sampling";
  }
  return "?";
}

}  // namespace arithdyn

#include "arithdyn/enumerate.hpp"

#include <cstdlib>
#include <numeric>

#include "arithdyn/error.hpp"

namespace arithdyn {

namespace {

// One height shell: canonical tuples with max|coord| exactly m, visited in
// lexicographic order. Prunes the canonical-sign constraint (first nonzero
// coordinate positive) while descending.
class ShellWalker {
 public:
  ShellWalker(std::size_t len, long long m, bool last_nonzero,
              const std::function<bool(const std::vector<long long>&)>& emit)
      : len_(len), m_(m), last_nonzero_(last_nonzero), emit_(emit), buf_(len, 0) {}

  bool run() { return recurse(0, false, true); }

 private:
  bool recurse(std::size_t pos, bool seen_max, bool zero_prefix) {
    if (pos == len_) {
      long long g = 0;
      for (long long v : buf_) g = std::gcd(g, std::llabs(v));
      if (g != 1) return true;  // non-coprime or all-zero
      return emit_(buf_);
    }
    const bool last = pos + 1 == len_;
    const long long lo = zero_prefix ? 0 : -m_;
    for (long long v = lo; v <= m_; ++v) {
      if (!seen_max && last && std::llabs(v) != m_) continue;
      if (last && last_nonzero_ && v == 0) continue;
      if (zero_prefix && v < 0) continue;
      buf_[pos] = v;
      if (!recurse(pos + 1, seen_max || std::llabs(v) == m_, zero_prefix && v == 0)) {
        return false;
      }
    }
    buf_[pos] = 0;
    return true;
  }

  std::size_t len_;
  long long m_;
  bool last_nonzero_;
  const std::function<bool(const std::vector<long long>&)>& emit_;
  std::vector<long long> buf_;
};

long long shell_bound_as_ll(const Integer& bound) {
  if (bound < 0) return 0;
  if (!bound.fits_slong_p() || bound.get_si() > (1LL << 40)) {
    fail(ErrorKind::Resource, "height bound too large to enumerate");
  }
  return bound.get_si();
}

void enumerate_shells(std::size_t dimension_n, const Integer& bound, bool last_nonzero,
                      const std::function<bool(const std::vector<long long>&)>& emit) {
  const long long m_max = shell_bound_as_ll(bound);
  for (long long m = 1; m <= m_max; ++m) {
    ShellWalker walker(dimension_n + 1, m, last_nonzero, emit);
    if (!walker.run()) return;
  }
}

ProjPoint to_proj(const std::vector<long long>& tuple) {
  std::vector<Integer> coords;
  coords.reserve(tuple.size());
  for (long long v : tuple) coords.emplace_back(static_cast<long>(v));
  return ProjPoint::from_integers(std::move(coords));
}

}  // namespace

void enumerate_projective(std::size_t dimension_n, const Integer& bound,
                          const std::function<bool(const ProjPoint&)>& visit) {
  enumerate_shells(dimension_n, bound, false,
                   [&](const std::vector<long long>& t) { return visit(to_proj(t)); });
}

void enumerate_affine(std::size_t dimension_n, const Integer& bound,
                      const std::function<bool(const AffinePoint&)>& visit) {
  enumerate_shells(dimension_n, bound, true, [&](const std::vector<long long>& t) {
    std::vector<Rational> coords;
    coords.reserve(t.size() - 1);
    for (std::size_t i = 0; i + 1 < t.size(); ++i) {
      coords.push_back(make_rational(t[i], t.back()));
    }
    return visit(AffinePoint(std::move(coords)));
  });
}

std::vector<ProjPoint> bounded_height_projective(std::size_t dimension_n, const HeightBound& b) {
  std::vector<ProjPoint> out;
  enumerate_projective(dimension_n, b.max_coord, [&](const ProjPoint& p) {
    out.push_back(p);
    return true;
  });
  return out;
}

std::vector<AffinePoint> bounded_height_affine(std::size_t dimension_n, const HeightBound& b) {
  std::vector<AffinePoint> out;
  enumerate_affine(dimension_n, b.max_coord, [&](const AffinePoint& p) {
    out.push_back(p);
    return true;
  });
  return out;
}

Integer enumeration_tuple_bound(std::size_t dimension_n, const Integer& bound) {
  if (bound <= 0) return Integer(0);
  Integer side = 2 * bound + 1;
  Integer total(1);
  for (std::size_t i = 0; i <= dimension_n; ++i) total *= side;
  return total;
}

}  // namespace arithdyn

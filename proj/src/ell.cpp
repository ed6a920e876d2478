#include "arithdyn/ell.hpp"

#include <algorithm>
#include <cmath>

#include "arithdyn/error.hpp"

namespace arithdyn {

namespace {

std::vector<bool> step_flags(const std::vector<long double>& v, long double factor) {
  std::vector<bool> ok;
  if (v.size() < 2) return ok;
  ok.reserve(v.size() - 1);
  for (std::size_t i = 0; i + 1 < v.size(); ++i) {
    const long double lhs = v[i + 1];
    const long double rhs = factor * v[i];
    const long double slack = 1e-12L * std::max<long double>({1.0L, fabsl(lhs), fabsl(rhs)});
    ok.push_back(lhs >= rhs - slack);
  }
  return ok;
}

long double tail_liminf_proxy(const std::vector<double>& heights, long double alpha) {
  const std::size_t n = heights.size();
  const std::size_t tail = std::max<std::size_t>(1, (n + 2) / 3);
  long double best = 0.0L;
  bool first = true;
  for (std::size_t i = n - tail; i < n; ++i) {
    const long double v = static_cast<long double>(heights[i]) / powl(alpha, i);
    if (first || v < best) {
      best = v;
      first = false;
    }
  }
  return best;
}

}  // namespace

EllSequence ell_sequence(const std::vector<double>& heights, const LemmaConstants& c) {
  if (heights.size() < 2) {
    fail(ErrorKind::Parameter, "ell sequence needs at least two heights");
  }
  EllSequence seq;
  seq.consts = c;
  seq.flavor = EllSequence::Flavor::OneSided;
  const long double shift = c.C / (c.alpha - 1.0L);
  for (std::size_t n = 0; n + 1 < heights.size(); ++n) {
    seq.values.push_back(static_cast<long double>(heights[n + 1]) / c.d1 -
                         static_cast<long double>(heights[n]) / (c.alpha * c.d2) - shift);
  }
  seq.step_ok = step_flags(seq.values, c.alpha);
  seq.ell_infinity_proxy = tail_liminf_proxy(heights, c.alpha);
  return seq;
}

EllSequence ell_sequence_two_sided(const std::vector<double>& heights, const LemmaConstants& c) {
  if (heights.size() < 3 || heights.size() % 2 == 0) {
    fail(ErrorKind::Parameter, "two-sided ell sequence needs an odd, centered height list");
  }
  const std::size_t center = heights.size() / 2;
  auto h = [&](long i) { return static_cast<long double>(heights[center + i]); };

  EllSequence seq;
  seq.consts = c;
  seq.flavor = EllSequence::Flavor::TwoSided;
  const long double shift_a = c.C / (c.alpha - 1.0L);
  const long double shift_b = c.C / (c.beta - 1.0L);
  const long m = static_cast<long>(center);
  for (long n = 0; n <= m; ++n) {
    // plus side needs h(f^(n-1)); n = 0 uses the backward point.
    if (n - 1 >= -m) {
      seq.values.push_back(h(n) / c.d1 - h(n - 1) / (c.alpha * c.d2) - shift_a);
    }
    if (-n + 1 <= m) {
      seq.minus_values.push_back(h(-n) / c.d2 - h(-n + 1) / (c.beta * c.d1) - shift_b);
    }
  }
  seq.step_ok = step_flags(seq.values, c.alpha);
  seq.minus_step_ok = step_flags(seq.minus_values, c.beta);

  std::vector<double> forward(heights.begin() + center, heights.end());
  seq.ell_infinity_proxy = tail_liminf_proxy(forward, c.alpha);
  return seq;
}

}  // namespace arithdyn

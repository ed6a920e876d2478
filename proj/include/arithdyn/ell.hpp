#pragma once

#include <optional>
#include <vector>

#include "arithdyn/degrees.hpp"

namespace arithdyn {

/// Diagnostics for the two-term height recursion. With constants
/// (zeta, d1, d2, C) and alpha as in LemmaConstants, the one-sided sequence
/// along heights h_0, h_1, ... is
///     ell_n = h_(n+1)/d1 - h_n/(alpha d2) - C/(alpha - 1),
/// and the recursion predicts ell_(n+1) >= alpha * ell_n whenever the
/// height inequality holds; the flags record each step's verdict. The
/// two-sided flavor runs the forward sequence together with its mirror
///     ell_minus_n = h_(-n)/d2 - h_(-n+1)/(beta d1) - C/(beta - 1)
/// over a full-orbit height list.
struct EllSequence {
  LemmaConstants consts;
  enum class Flavor { OneSided, TwoSided } flavor = Flavor::OneSided;

  std::vector<long double> values;   // one-sided, or the plus side
  std::vector<bool> step_ok;         // values[n+1] >= alpha * values[n]
  std::vector<long double> minus_values;  // two-sided only
  std::vector<bool> minus_step_ok;        // minus[n+1] >= beta * minus[n]

  /// Finite-scan proxy for the liminf of h_n / alpha^n: the minimum over
  /// the tail (last third) of the forward heights. A proxy only; the true
  /// liminf is not computable from a finite scan.
  long double ell_infinity_proxy = 0.0L;
};

/// One-sided flavor: heights[i] = h(f^i P) as log values.
EllSequence ell_sequence(const std::vector<double>& heights, const LemmaConstants& consts);

/// Two-sided flavor: centered full-orbit heights, heights[center + i] =
/// h(f^i P) for i in [-center, center]; the list length must be odd.
EllSequence ell_sequence_two_sided(const std::vector<double>& heights,
                                   const LemmaConstants& consts);

}  // namespace arithdyn

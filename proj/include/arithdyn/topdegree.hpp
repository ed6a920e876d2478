#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "arithdyn/maps.hpp"

namespace arithdyn {

struct FiberSample {
  std::uint64_t prime;
  std::vector<std::uint64_t> target;
  std::int64_t count;
};

struct TopDegreeEstimate {
  std::int64_t value = 0;
  enum class Method { ExactMonomial, BirationalUnit, FiberSampling } method;
  std::vector<FiberSample> samples;  // filled for FiberSampling
  bool exact = false;                // sampling is a heuristic lower estimate
  bool suspect_not_dominant = false; // a fiber count exceeded the Bezout bound
};

struct TopDegreeOptions {
  int prime_count = 3;
  int samples_per_prime = 5;
  std::uint64_t seed = 1;
  // Exhaustive fiber counting scans p^N source points, so the primes stay
  // small and configurable.
  std::uint64_t prime_min = 101;
  std::uint64_t prime_cap = 499;
  bool force_sampling = false;
};

/// Topological degree (number of preimages of a generic point).
/// Dispatch: monomial maps give |det| of the exponent matrix exactly;
/// maps with a verified inverse are birational, degree 1; otherwise fibers
/// are sampled over prime fields, targets drawn from the image of random
/// source points so generic fibers are hit, and the estimate is the maximal
/// observed count. Sampling requires dimension <= 2.
TopDegreeEstimate topological_degree(const AffinePolyMap& f,
                                     const std::optional<AffinePolyMap>& f_inverse,
                                     const TopDegreeOptions& options);

/// |det| of an integer matrix, exact.
Integer abs_det(const std::vector<std::vector<std::int64_t>>& m);

std::string method_name(TopDegreeEstimate::Method m);

}  // namespace arithdyn

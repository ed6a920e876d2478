#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "arithdyn/report.hpp"

namespace arithdyn {

/// Experiment knobs shared across CLI commands. Defaults may be overridden
/// by a JSON config file named in the ARITHDYN_CONFIG environment variable,
/// then by command-line flags. The seed has a fixed default so runs are
/// deterministic unless asked otherwise.
struct RunConfig {
  int n_max = 10;
  std::optional<double> height_bound;       // log scale
  std::optional<std::int64_t> max_coord;    // exact alternative to height_bound
  int period_bound = 4;
  int tail_window = 0;  // 0 = last ceil(scan/3) entries
  int prime_count = 3;
  int samples_per_prime = 5;
  std::uint64_t seed = 1;
  std::int64_t term_count_cap = 1000000;
  std::int64_t coordinate_digit_cap = 1000000;
  std::uint64_t prime_min = 101;
  std::uint64_t prime_cap = 499;
  std::int64_t enumeration_cap = 20000000;
  bool force_sampling = false;
  OutputFormat format = OutputFormat::Table;

  /// Applies the file named by ARITHDYN_CONFIG (if set) on top of defaults.
  static RunConfig from_environment();
  void apply_json_file(const std::string& path);
};

}  // namespace arithdyn

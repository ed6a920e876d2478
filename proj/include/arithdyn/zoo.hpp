#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "arithdyn/maps.hpp"

namespace arithdyn {

struct ZooParams {
  std::map<std::string, Rational> scalars;
  std::optional<std::vector<std::vector<std::int64_t>>> matrix;
};

/// A constructed zoo map. Families with polynomial affine components fill
/// the affine slots; families that only live projectively (monomial maps
/// with negative exponents) fill the projective slots directly. Inverses
/// are stored only when they are exact polynomial (or monomial) maps, and
/// always pass inverse_check at construction.
struct ZooMap {
  std::string label;
  std::optional<AffinePolyMap> affine;
  std::optional<AffinePolyMap> affine_inverse;
  std::optional<ProjRationalMap> projective;
  std::optional<ProjRationalMap> projective_inverse;

  /// The projective extension (homogenization of the affine map when the
  /// family is affine).
  ProjRationalMap proj() const;
  std::optional<ProjRationalMap> proj_inverse() const;
  bool has_inverse() const { return affine_inverse || projective_inverse; }
};

struct MapZooEntry {
  std::string name;
  std::string params_help;
  std::string description;
  std::function<ZooMap(const ZooParams&)> build;
};

const std::vector<MapZooEntry>& zoo_entries();

ZooMap zoo_get(const std::string& name, const ZooParams& params);

}  // namespace arithdyn

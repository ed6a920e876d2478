#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "arithdyn/maps.hpp"
#include "arithdyn/zoo.hpp"

namespace arithdyn {

/// A map definition as it travels through files and the CLI: either explicit
/// polynomial components over named variables, or a zoo reference with
/// parameters. The two forms are mutually exclusive. Inverse components,
/// when given, must pass inverse_check on build.
struct MapDocument {
  std::string name;
  int dimension = 0;
  VarList variables;
  std::vector<std::string> components;
  std::optional<std::vector<std::string>> inverse_components;
  std::optional<std::pair<std::string, ZooParams>> zoo_ref;

  struct Built {
    std::string label;
    std::optional<AffinePolyMap> map;  // absent for projective-only families
    std::optional<AffinePolyMap> inverse;
    std::optional<ProjRationalMap> projective;  // set for projective-only families
    std::optional<ProjRationalMap> projective_inverse;

    ProjRationalMap proj() const { return projective ? *projective : homogenize(*map); }
    std::optional<ProjRationalMap> proj_inverse() const {
      if (projective_inverse) return projective_inverse;
      if (inverse) return homogenize(*inverse);
      return std::nullopt;
    }
    /// The affine map, or a parameter error naming the operation.
    const AffinePolyMap& affine(const char* operation) const;
  };
  Built build() const;

  std::string to_json_text() const;
  static MapDocument from_json_text(const std::string& text);
  static MapDocument from_file(const std::string& path);
};

/// Serializes a built zoo map into an explicit-component document that
/// re-parses to the identical canonical map.
MapDocument to_document(const ZooMap& zoo);

/// Parses "k=v,k=v" CLI parameter syntax; values are rationals, or a
/// bracketed integer matrix for 'm' (for the monomial family).
ZooParams parse_zoo_params(const std::string& text);

}  // namespace arithdyn

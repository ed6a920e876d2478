#include "arithdyn/mapdoc.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "arithdyn/error.hpp"
#include "arithdyn/poly_parser.hpp"

namespace arithdyn {

using ordered_json = nlohmann::ordered_json;

const AffinePolyMap& MapDocument::Built::affine(const char* operation) const {
  if (!map) {
    fail(ErrorKind::Parameter,
         std::string(operation) + " needs an affine polynomial map, but '" + label +
             "' only has a projective model");
  }
  return *map;
}

MapDocument::Built MapDocument::build() const {
  if (zoo_ref && !components.empty()) {
    fail(ErrorKind::Structural, "map document cannot have both a zoo reference and components");
  }
  if (zoo_ref) {
    ZooMap z = zoo_get(zoo_ref->first, zoo_ref->second);
    if (!z.affine && !z.projective) fail(ErrorKind::Structural, "zoo map built nothing");
    return Built{z.label, z.affine, z.affine_inverse, z.projective, z.projective_inverse};
  }

  if (components.empty()) {
    fail(ErrorKind::Structural, "map document needs components or a zoo reference");
  }
  if (variables.empty()) {
    fail(ErrorKind::Structural, "map document needs variable names");
  }
  if (dimension != 0 && static_cast<std::size_t>(dimension) != variables.size()) {
    fail(ErrorKind::Structural, "dimension does not match the variable count");
  }
  if (components.size() != variables.size()) {
    fail(ErrorKind::Structural, "component count must equal the variable count");
  }
  VarListPtr vars = make_vars(variables);
  std::vector<MultiPoly> comps;
  comps.reserve(components.size());
  for (const auto& s : components) comps.push_back(parse_poly(s, vars));
  AffinePolyMap f(std::move(comps));

  std::optional<AffinePolyMap> inv;
  if (inverse_components) {
    if (inverse_components->size() != variables.size()) {
      fail(ErrorKind::Structural, "inverse component count must equal the variable count");
    }
    std::vector<MultiPoly> icomps;
    for (const auto& s : *inverse_components) icomps.push_back(parse_poly(s, vars));
    inv = AffinePolyMap(std::move(icomps));
    if (!inverse_check(f, *inv)) {
      fail(ErrorKind::Structural, "inverse components fail the inverse check");
    }
  }
  return Built{name.empty() ? "map" : name, std::move(f), std::move(inv), std::nullopt,
               std::nullopt};
}

std::string MapDocument::to_json_text() const {
  ordered_json j;
  if (!name.empty()) j["name"] = name;
  if (zoo_ref) {
    ordered_json z;
    z["name"] = zoo_ref->first;
    ordered_json params = ordered_json::object();
    for (const auto& [k, v] : zoo_ref->second.scalars) params[k] = v.get_str();
    if (zoo_ref->second.matrix) params["m"] = *zoo_ref->second.matrix;
    z["params"] = params;
    j["zoo"] = z;
  } else {
    j["dimension"] = dimension;
    j["variables"] = variables;
    j["components"] = components;
    if (inverse_components) j["inverse_components"] = *inverse_components;
  }
  return j.dump(2);
}

MapDocument MapDocument::from_json_text(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(ErrorKind::Parse, std::string("map document is not valid JSON: ") + e.what());
  }
  MapDocument doc;
  if (j.contains("name")) doc.name = j["name"].get<std::string>();
  if (j.contains("zoo")) {
    const auto& z = j["zoo"];
    ZooParams params;
    if (z.contains("params")) {
      for (auto it = z["params"].begin(); it != z["params"].end(); ++it) {
        if (it.key() == "m" && it.value().is_array()) {
          params.matrix = it.value().get<std::vector<std::vector<std::int64_t>>>();
        } else if (it.value().is_string()) {
          params.scalars[it.key()] = parse_rational(it.value().get<std::string>());
        } else if (it.value().is_number_integer()) {
          params.scalars[it.key()] = Rational(it.value().get<long>());
        } else {
          fail(ErrorKind::Parse, "zoo parameter '" + it.key() + "' must be a rational string, "
                                 "an integer, or a matrix");
        }
      }
    }
    doc.zoo_ref = {z["name"].get<std::string>(), std::move(params)};
    if (j.contains("components")) {
      fail(ErrorKind::Structural, "map document cannot have both a zoo reference and components");
    }
    return doc;
  }
  if (j.contains("dimension")) doc.dimension = j["dimension"].get<int>();
  if (j.contains("variables")) doc.variables = j["variables"].get<VarList>();
  if (j.contains("components")) doc.components = j["components"].get<std::vector<std::string>>();
  if (j.contains("inverse_components")) {
    doc.inverse_components = j["inverse_components"].get<std::vector<std::string>>();
  }
  return doc;
}

MapDocument MapDocument::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::Parameter, "cannot open map file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return from_json_text(buf.str());
}

MapDocument to_document(const ZooMap& zoo) {
  MapDocument doc;
  doc.name = zoo.label;
  if (zoo.affine) {
    doc.dimension = static_cast<int>(zoo.affine->dimension());
    doc.variables = *zoo.affine->vars();
    for (const auto& c : zoo.affine->components()) doc.components.push_back(c.to_string());
    if (zoo.affine_inverse) {
      std::vector<std::string> inv;
      for (const auto& c : zoo.affine_inverse->components()) inv.push_back(c.to_string());
      doc.inverse_components = std::move(inv);
    }
  } else {
    fail(ErrorKind::Unsupported,
         "projective-only maps serialize through their zoo reference, not components");
  }
  return doc;
}

ZooParams parse_zoo_params(const std::string& text) {
  ZooParams params;
  if (text.empty()) return params;
  // Split on top-level commas (matrix values contain bracketed commas).
  std::vector<std::string> pieces;
  int depth = 0;
  std::string cur;
  for (char ch : text) {
    if (ch == '[') ++depth;
    if (ch == ']') --depth;
    if (ch == ',' && depth == 0) {
      pieces.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!cur.empty()) pieces.push_back(cur);

  for (const auto& piece : pieces) {
    const auto eq = piece.find('=');
    if (eq == std::string::npos) {
      fail(ErrorKind::Parse, "zoo parameter must look like key=value: '" + piece + "'");
    }
    std::string key = piece.substr(0, eq);
    std::string value = piece.substr(eq + 1);
    auto strip = [](std::string& s) {
      s.erase(0, s.find_first_not_of(" \t"));
      s.erase(s.find_last_not_of(" \t") + 1);
    };
    strip(key);
    strip(value);
    if (!value.empty() && value.front() == '[') {
      try {
        params.matrix = nlohmann::json::parse(value).get<std::vector<std::vector<std::int64_t>>>();
      } catch (const nlohmann::json::exception&) {
        fail(ErrorKind::Parse, "matrix parameter must be like [[1,1],[1,0]]: '" + value + "'");
      }
    } else {
      params.scalars[key] = parse_rational(value);
    }
  }
  return params;
}

}  // namespace arithdyn

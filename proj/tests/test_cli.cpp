#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include <json.hpp>

#include "arithdyn/error.hpp"
#include "arithdyn/mapdoc.hpp"
#include "arithdyn/report.hpp"
#include "arithdyn/runconfig.hpp"
#include "arithdyn/zoo.hpp"

using namespace arithdyn;

#ifndef ARITHDYN_CLI_PATH
#define ARITHDYN_CLI_PATH "./arithdyn"
#endif

namespace {

struct CliResult {
  int exit_code;
  std::string out;
};

CliResult run_cli(const std::string& args) {
  const std::string cmd = std::string(ARITHDYN_CLI_PATH) + " " + args + " 2>&1";
  std::array<char, 4096> buf;
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  while (std::size_t got = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), got);
  const int status = pclose(pipe);
  return CliResult{WEXITSTATUS(status), out};
}

ZooParams henon_params(long a, long b) {
  ZooParams p;
  p.scalars["a"] = Rational(a);
  p.scalars["b"] = Rational(b);
  return p;
}

}  // namespace

TEST_CASE("zoo maps round-trip through map documents") {
  std::vector<ZooMap> maps;
  maps.push_back(zoo_get("henon", henon_params(1, 0)));
  maps.push_back(zoo_get("henon", henon_params(-2, 3)));
  {
    ZooParams p;
    p.scalars["d"] = Rational(2);
    maps.push_back(zoo_get("gs02", p));
  }
  {
    ZooParams p;
    p.matrix = {{1, 1}, {1, 0}};
    maps.push_back(zoo_get("monomial", p));
  }
  maps.push_back(zoo_get("shift", {}));
  maps.push_back(zoo_get("swap", {}));
  for (const auto& z : maps) {
    MapDocument doc = to_document(z);
    MapDocument reparsed = MapDocument::from_json_text(doc.to_json_text());
    MapDocument::Built built = reparsed.build();
    REQUIRE(built.map.has_value());
    CHECK(*built.map == *z.affine);
    if (z.affine_inverse) {
      REQUIRE(built.inverse.has_value());
      CHECK(*built.inverse == *z.affine_inverse);
    }
  }
}

TEST_CASE("map documents validate structure") {
  SUBCASE("zoo reference and components are mutually exclusive") {
    MapDocument doc;
    doc.zoo_ref = {"henon", henon_params(1, 0)};
    doc.components = {"y", "y^2+x"};
    CHECK_THROWS_AS(doc.build(), Error);
  }
  SUBCASE("inverse components must invert") {
    MapDocument doc;
    doc.dimension = 2;
    doc.variables = {"x", "y"};
    doc.components = {"y", "y^2 + x"};
    doc.inverse_components = {{"x", "y"}};
    CHECK_THROWS_AS(doc.build(), Error);
  }
  SUBCASE("component count must match variables") {
    MapDocument doc;
    doc.variables = {"x", "y"};
    doc.components = {"x"};
    CHECK_THROWS_AS(doc.build(), Error);
  }
  SUBCASE("a good document builds") {
    MapDocument doc = MapDocument::from_json_text(R"({
      "name": "henon-by-hand",
      "dimension": 2,
      "variables": ["x", "y"],
      "components": ["y", "y^2 + x"],
      "inverse_components": ["y - x^2", "x"]
    })");
    MapDocument::Built b = doc.build();
    CHECK(b.label == "henon-by-hand");
    REQUIRE(b.inverse.has_value());
    CHECK(*b.map == *zoo_get("henon", henon_params(1, 0)).affine);
  }
}

TEST_CASE("zoo parameter text parses") {
  ZooParams p = parse_zoo_params("a=1,b=-3/2");
  CHECK(p.scalars.at("a") == 1);
  CHECK(p.scalars.at("b") == make_rational(-3, 2));
  ZooParams m = parse_zoo_params("m=[[1,1],[1,0]]");
  REQUIRE(m.matrix.has_value());
  CHECK((*m.matrix)[0][1] == 1);
  CHECK((*m.matrix)[1][1] == 0);
  CHECK_THROWS_AS(parse_zoo_params("oops"), Error);
}

TEST_CASE("run config reads the environment file") {
  const std::string path = "/tmp/arithdyn_test_config.json";
  {
    std::ofstream out(path);
    out << R"({"n_max": 7, "seed": 99, "format": "json"})";
  }
  RunConfig cfg;
  cfg.apply_json_file(path);
  CHECK(cfg.n_max == 7);
  CHECK(cfg.seed == 99);
  CHECK(cfg.format == OutputFormat::Json);
  std::remove(path.c_str());
}

TEST_CASE("report rendering is deterministic and numerically consistent") {
  auto build = [] {
    Report rep;
    rep.json["command"] = "demo";
    rep.json["value"] = json_real(1.96815720974312);
    rep.table_headers({"k", "v"});
    rep.table_row({"1", format_real(1.96815720974312)});
    return rep;
  };
  Report a = build();
  Report b = build();
  CHECK(a.render(OutputFormat::Json) == b.render(OutputFormat::Json));
  // Table and JSON carry the same 12-digit rendering of the number.
  const std::string t = a.render(OutputFormat::Table);
  const std::string j = a.render(OutputFormat::Json);
  CHECK(t.find("1.96815720974") != std::string::npos);
  CHECK(j.find("1.96815720974") != std::string::npos);
}

TEST_CASE("cli: spec'd invocations") {
  SUBCASE("degseq on gs02 d=2") {
    CliResult r = run_cli("degseq --zoo gs02 --param d=2 --nmax 3");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("1  3") != std::string::npos);
    CHECK(r.out.find("2  9") != std::string::npos);
    CHECK(r.out.find("3  27") != std::string::npos);
  }
  SUBCASE("lemma 3 1 1 1") {
    CliResult r = run_cli("lemma 3 1 1 1");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("2.61803398875") != std::string::npos);
  }
  SUBCASE("orbit ends at (27, 734)") {
    CliResult r = run_cli("orbit --zoo henon --param a=1,b=0 --point \"(1,2)\" --nmax 3");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("(27, 734)") != std::string::npos);
  }
}

TEST_CASE("cli: identical seed and config give byte-identical json") {
  const std::string args =
      "topdeg --zoo monomial --param m=[[2,0],[0,2]] --force-sampling --seed 11 --format json";
  CliResult a = run_cli(args);
  CliResult b = run_cli(args);
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("\"count\": 4") != std::string::npos);
}

TEST_CASE("cli: json and table outputs carry identical numeric content") {
  CliResult t = run_cli("arithdeg --zoo henon --param a=1,b=0 --point \"(1,2)\" --nmax 12");
  CliResult j = run_cli(
      "arithdeg --zoo henon --param a=1,b=0 --point \"(1,2)\" --nmax 12 --format json");
  CHECK(t.exit_code == 0);
  CHECK(j.exit_code == 0);
  // Every root the JSON carries appears verbatim in the table rendering.
  auto doc = nlohmann::json::parse(j.out);
  int checked = 0;
  for (const auto& row : doc["roots"]) {
    const double v = row["root"].get<double>();
    CHECK(t.out.find(format_real(v)) != std::string::npos);
    ++checked;
  }
  CHECK(checked >= 10);
}

TEST_CASE("cli: errors are structured with distinct exit codes") {
  SUBCASE("parse errors exit 2") {
    CliResult r = run_cli("dml --zoo shift --point \"(0)\" --subvariety \"x +\" --nmax 3");
    CHECK(r.exit_code == 2);
    CHECK(r.out.find("parse error") != std::string::npos);
  }
  SUBCASE("parameter errors exit 3") {
    CliResult r = run_cli("degseq --zoo henon --param a=0");
    CHECK(r.exit_code == 3);
    CHECK(r.out.find("henon needs a != 0") != std::string::npos);
  }
  SUBCASE("resource refusals exit 4 and name the cap") {
    CliResult r = run_cli("periodic --zoo henon --param a=1,b=-1 --max-coord 1000000");
    CHECK(r.exit_code == 4);
    CHECK(r.out.find("cap") != std::string::npos);
  }
  SUBCASE("missing map is a parameter error") {
    CliResult r = run_cli("degseq --nmax 3");
    CHECK(r.exit_code == 3);
  }
}

TEST_CASE("cli: map file input") {
  const std::string path = "/tmp/arithdyn_test_map.json";
  {
    std::ofstream out(path);
    out << zoo_get("henon", henon_params(1, -1)).affine.has_value();
  }
  {
    MapDocument doc = to_document(zoo_get("henon", henon_params(1, -1)));
    std::ofstream out(path);
    out << doc.to_json_text();
  }
  CliResult r = run_cli("periodic --map " + path + " --max-coord 3 --period-bound 2");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("periodic: 4") != std::string::npos);
  std::remove(path.c_str());
}

// Command-line front end: one subcommand per experiment, deterministic
// output for a fixed seed, reports as table / JSON / CSV.

#include <CLI11.hpp>
#include <iostream>
#include <optional>
#include <string>

#include "arithdyn/arith_degree.hpp"
#include "arithdyn/degrees.hpp"
#include "arithdyn/density.hpp"
#include "arithdyn/dml.hpp"
#include "arithdyn/enumerate.hpp"
#include "arithdyn/error.hpp"
#include "arithdyn/mapdoc.hpp"
#include "arithdyn/orbit.hpp"
#include "arithdyn/poly_parser.hpp"
#include "arithdyn/report.hpp"
#include "arithdyn/runconfig.hpp"
#include "arithdyn/survey.hpp"
#include "arithdyn/zoo.hpp"

namespace {

using namespace arithdyn;
using nlohmann::ordered_json;

struct MapInput {
  std::string file;
  std::string zoo_name;
  std::string zoo_params;

  MapDocument::Built load() const {
    if (!file.empty() && !zoo_name.empty()) {
      fail(ErrorKind::Parameter, "--map and --zoo are mutually exclusive");
    }
    if (!file.empty()) return MapDocument::from_file(file).build();
    if (!zoo_name.empty()) {
      MapDocument doc;
      doc.zoo_ref = {zoo_name, parse_zoo_params(zoo_params)};
      return doc.build();
    }
    fail(ErrorKind::Parameter, "a map is required: --map FILE or --zoo NAME [--param k=v,...]");
  }
};

void add_map_options(CLI::App* cmd, MapInput& in) {
  cmd->add_option("--map", in.file, "map definition file (JSON)");
  cmd->add_option("--zoo", in.zoo_name, "built-in map family name");
  cmd->add_option("--param", in.zoo_params, "zoo parameters, e.g. a=1,b=0 or m=[[1,1],[1,0]]");
}

std::string fmt_name(OutputFormat f) {
  switch (f) {
    case OutputFormat::Table: return "table";
    case OutputFormat::Json: return "json";
    case OutputFormat::Csv: return "csv";
  }
  return "table";
}

void emit(const Report& rep, const RunConfig& cfg) { std::cout << rep.render(cfg.format); }

ordered_json height_json(const HeightValue& h) {
  ordered_json j;
  j["max_coord"] = h.max_abs_coord.get_str();
  j["log"] = json_real(h.log_value);
  return j;
}

int run_zoo(const RunConfig& cfg) {
  Report rep;
  rep.json["command"] = "zoo";
  ordered_json entries = ordered_json::array();
  rep.table_headers({"name", "parameters", "description"});
  for (const auto& e : zoo_entries()) {
    entries.push_back(
        {{"name", e.name}, {"parameters", e.params_help}, {"description", e.description}});
    rep.table_row({e.name, e.params_help, e.description});
  }
  rep.json["entries"] = entries;
  emit(rep, cfg);
  return 0;
}

int run_degseq(const MapInput& in, const RunConfig& cfg, bool estimate) {
  MapDocument::Built built = in.load();
  DegreeSequence seq = degree_sequence(built.proj(), cfg.n_max, cfg.term_count_cap, built.label);

  Report rep;
  rep.json["command"] = estimate ? "dyndeg" : "degseq";
  rep.json["map"] = built.label;
  rep.json["n_max"] = cfg.n_max;
  rep.json["truncated"] = seq.truncated;
  ordered_json entries = ordered_json::array();
  for (const auto& [n, d] : seq.entries) entries.push_back({{"n", n}, {"degree", d}});
  rep.json["entries"] = entries;
  rep.note("map: " + built.label);

  if (!estimate) {
    rep.table_headers({"n", "deg(f^n)"});
    for (const auto& [n, d] : seq.entries) rep.table_row({std::to_string(n), std::to_string(d)});
    if (seq.truncated) rep.note("sequence truncated by the term-count cap");
  } else {
    DynDegreeEstimate est = estimate_delta1(seq);
    rep.json["stable"] = est.stable;
    if (est.delta1_exact) rep.json["delta1_exact"] = *est.delta1_exact;
    ordered_json roots = ordered_json::array();
    for (double r : est.roots) roots.push_back(json_real(r));
    ordered_json ratios = ordered_json::array();
    for (double r : est.ratios) ratios.push_back(json_real(r));
    rep.json["roots"] = roots;
    rep.json["ratios"] = ratios;
    rep.table_headers({"n", "deg(f^n)", "deg^(1/n)", "deg(f^(n+1))/deg(f^n)"});
    for (std::size_t i = 0; i < seq.entries.size(); ++i) {
      rep.table_row({std::to_string(seq.entries[i].first), std::to_string(seq.entries[i].second),
                     format_real(est.roots[i]),
                     i < est.ratios.size() ? format_real(est.ratios[i]) : ""});
    }
    rep.note(est.stable ? "stable: delta1 = " + std::to_string(*est.delta1_exact) + " exactly"
                        : "not stable within the scan; delta1 reported as data only");
  }
  emit(rep, cfg);
  return 0;
}

int run_topdeg(const MapInput& in, const RunConfig& cfg) {
  MapDocument::Built built = in.load();
  TopDegreeOptions opt;
  opt.prime_count = cfg.prime_count;
  opt.samples_per_prime = cfg.samples_per_prime;
  opt.seed = cfg.seed;
  opt.prime_min = cfg.prime_min;
  opt.prime_cap = cfg.prime_cap;
  opt.force_sampling = cfg.force_sampling;
  TopDegreeEstimate est = topological_degree(built.affine("topdeg"), built.inverse, opt);

  Report rep;
  rep.json["command"] = "topdeg";
  rep.json["map"] = built.label;
  rep.json["value"] = est.value;
  rep.json["method"] = method_name(est.method);
  rep.json["exact"] = est.exact;
  if (est.method == TopDegreeEstimate::Method::FiberSampling) {
    rep.json["seed"] = cfg.seed;
    rep.json["suspect_not_dominant"] = est.suspect_not_dominant;
    ordered_json samples = ordered_json::array();
    for (const auto& s : est.samples) {
      samples.push_back({{"prime", s.prime}, {"target", s.target}, {"count", s.count}});
    }
    rep.json["samples"] = samples;
  }
  rep.note("map: " + built.label);
  rep.note("topological degree " + std::string(est.exact ? "(exact): " : "(heuristic max): ") +
           std::to_string(est.value) + " via " + method_name(est.method));
  rep.table_headers({"prime", "target", "preimages"});
  for (const auto& s : est.samples) {
    std::string t = "(";
    for (std::size_t i = 0; i < s.target.size(); ++i) {
      t += (i ? ", " : "") + std::to_string(s.target[i]);
    }
    t += ")";
    rep.table_row({std::to_string(s.prime), t, std::to_string(s.count)});
  }
  emit(rep, cfg);
  return 0;
}

int run_orbit(const MapInput& in, const std::string& point, const RunConfig& cfg) {
  MapDocument::Built built = in.load();
  OrbitOptions opt;
  opt.coordinate_digit_cap = cfg.coordinate_digit_cap;

  Report rep;
  rep.json["command"] = "orbit";
  rep.json["map"] = built.label;
  rep.json["n_max"] = cfg.n_max;
  rep.table_headers({"n", "point", "max_coord", "height"});

  OrbitRecord rec =
      built.map
          ? forward_orbit(*built.map, AffinePoint::parse(point), cfg.n_max, opt, built.label)
          : forward_orbit(*built.projective, ProjPoint::parse(point), cfg.n_max, opt,
                          built.label);
  rep.json["point"] = point;
  rep.json["truncated"] = rec.truncated;
  if (rec.indeterminacy_index) rep.json["indeterminacy_index"] = *rec.indeterminacy_index;
  ordered_json pts = ordered_json::array();
  for (std::size_t i = 0; i < rec.size(); ++i) {
    const std::string s =
        rec.projective ? rec.proj_points[i].to_string() : rec.affine_points[i].to_string();
    ordered_json row;
    row["n"] = rec.index_of(i);
    row["point"] = s;
    row["height"] = height_json(rec.heights[i]);
    pts.push_back(row);
    rep.table_row({std::to_string(rec.index_of(i)), s, rec.heights[i].max_abs_coord.get_str(),
                   format_real(rec.heights[i].log_value)});
  }
  rep.json["points"] = pts;
  rep.note("map: " + built.label);
  if (rec.indeterminacy_index) {
    rep.note("orbit met the indeterminacy locus at index " +
             std::to_string(*rec.indeterminacy_index));
  }
  if (rec.truncated) rep.note("orbit truncated by the coordinate-digit cap");
  emit(rep, cfg);
  return 0;
}

int run_arithdeg(const MapInput& in, const std::string& point, const RunConfig& cfg) {
  MapDocument::Built built = in.load();
  OrbitOptions opt;
  opt.coordinate_digit_cap = cfg.coordinate_digit_cap;
  OrbitRecord rec = forward_orbit(built.affine("arithdeg"), AffinePoint::parse(point), cfg.n_max,
                                  opt, built.label);
  ArithDegreeEstimate est = estimate_arith_degree(rec, cfg.tail_window);

  Report rep;
  rep.json["command"] = "arithdeg";
  rep.json["map"] = built.label;
  rep.json["point"] = point;
  rep.json["n_max"] = cfg.n_max;
  ordered_json roots = ordered_json::array();
  for (std::size_t i = 0; i < est.roots.size(); ++i) {
    roots.push_back({{"n", est.root_index[i]}, {"root", json_real(est.roots[i])}});
  }
  ordered_json ratios = ordered_json::array();
  for (std::size_t i = 0; i < est.ratios.size(); ++i) {
    ratios.push_back({{"n", est.ratio_index[i]}, {"ratio", json_real(est.ratios[i])}});
  }
  rep.json["roots"] = roots;
  rep.json["ratios"] = ratios;
  rep.json["tail"] = {{"begin", est.tail_begin},
                      {"end", est.tail_end},
                      {"lower_report", json_real(est.lower_report)},
                      {"upper_report", json_real(est.upper_report)},
                      {"ratio_min", json_real(est.ratio_tail_min)},
                      {"ratio_max", json_real(est.ratio_tail_max)}};
  if (est.alpha_exact) rep.json["alpha_exact"] = json_real(*est.alpha_exact);
  rep.note("map: " + built.label);
  rep.table_headers({"n", "h(f^n P)", "root", "ratio"});
  for (std::size_t i = 0; i < est.roots.size(); ++i) {
    std::string ratio;
    for (std::size_t k = 0; k < est.ratios.size(); ++k) {
      if (est.ratio_index[k] == est.root_index[i]) ratio = format_real(est.ratios[k]);
    }
    rep.table_row({std::to_string(est.root_index[i]),
                   format_real(rec.heights[est.root_index[i] - rec.start_index].log_value),
                   format_real(est.roots[i]), ratio});
  }
  rep.note("tail [" + std::to_string(est.tail_begin) + ", " + std::to_string(est.tail_end) +
           "]: roots in [" + format_real(est.lower_report) + ", " +
           format_real(est.upper_report) + "], ratios in [" + format_real(est.ratio_tail_min) +
           ", " + format_real(est.ratio_tail_max) + "]");
  if (est.alpha_exact) rep.note("periodic orbit: alpha = 1 exactly");
  emit(rep, cfg);
  return 0;
}

int run_periodic(const MapInput& in, const RunConfig& cfg) {
  MapDocument::Built built = in.load();
  HeightBound bound = cfg.max_coord ? HeightBound::from_max_coord(Integer(*cfg.max_coord))
                                    : HeightBound::from_log(cfg.height_bound.value_or(1.0));
  SurveyOptions opt;
  opt.enumeration_cap = Integer(cfg.enumeration_cap);
  opt.coordinate_digit_cap = cfg.coordinate_digit_cap;
  SurveyReport sr = periodic_point_survey(built.affine("periodic"), built.inverse, bound,
                                          cfg.period_bound, opt);

  Report rep;
  rep.json["command"] = "periodic";
  rep.json["map"] = built.label;
  rep.json["max_coord"] = sr.bound.max_coord.get_str();
  rep.json["height_bound"] = json_real(sr.bound.log_value);
  rep.json["period_bound"] = sr.period_bound;
  rep.json["escape_threshold"] = sr.escape_threshold.get_str();
  rep.json["points_scanned"] = sr.points_scanned;
  rep.json["counts"] = {{"periodic", sr.periodic_count},
                        {"preperiodic_within_scan", sr.preperiodic_count},
                        {"escaping", sr.escaping_count},
                        {"undecided", sr.undecided_count}};
  ordered_json pers = ordered_json::array();
  for (const auto& e : sr.periodic) {
    pers.push_back(
        {{"point", e.point.to_string()}, {"period", e.period}, {"height", height_json(e.height)}});
  }
  rep.json["periodic_points"] = pers;
  if (sr.max_periodic_height) {
    rep.json["max_periodic_height"] = height_json(*sr.max_periodic_height);
  }
  rep.note("map: " + built.label);
  rep.note("scanned " + std::to_string(sr.points_scanned) + " points of max coordinate <= " +
           sr.bound.max_coord.get_str());
  rep.note("periodic: " + std::to_string(sr.periodic_count) +
           ", preperiodic-within-scan: " + std::to_string(sr.preperiodic_count) +
           ", escaping: " + std::to_string(sr.escaping_count) +
           ", undecided: " + std::to_string(sr.undecided_count));
  if (sr.max_periodic_height) {
    rep.note("max periodic height: log " + sr.max_periodic_height->max_abs_coord.get_str() +
             " = " + format_real(sr.max_periodic_height->log_value));
  }
  rep.table_headers({"point", "period", "max_coord", "height"});
  for (const auto& e : sr.periodic) {
    rep.table_row({e.point.to_string(), std::to_string(e.period),
                   e.height.max_abs_coord.get_str(), format_real(e.height.log_value)});
  }
  emit(rep, cfg);
  return 0;
}

int run_dml(const MapInput& in, const std::string& point, const std::vector<std::string>& curves,
            const RunConfig& cfg) {
  MapDocument::Built built = in.load();
  const AffinePolyMap& f = built.affine("dml");
  std::vector<MultiPoly> polys;
  for (const auto& s : curves) polys.push_back(parse_poly(s, f.vars()));
  OrbitOptions opt;
  opt.coordinate_digit_cap = cfg.coordinate_digit_cap;
  ReturnSet rs = return_set(f, AffinePoint::parse(point), polys, cfg.n_max, opt);

  Report rep;
  rep.json["command"] = "dml";
  rep.json["map"] = built.label;
  rep.json["point"] = point;
  rep.json["subvariety"] = curves;
  rep.json["n_max"] = rs.n_max;
  rep.json["scanned_up_to"] = rs.scanned_up_to;
  rep.json["partial"] = rs.partial;
  rep.json["indices"] = rs.indices;
  if (rs.decomposition) {
    ordered_json d;
    ordered_json progs = ordered_json::array();
    for (const auto& ap : rs.decomposition->progressions) {
      progs.push_back({{"start", ap.start}, {"difference", ap.difference}});
    }
    d["progressions"] = progs;
    d["residual"] = rs.decomposition->residual;
    rep.json["decomposition"] = d;
  }
  rep.note("map: " + built.label);
  {
    std::string line = "return indices in [1, " + std::to_string(rs.scanned_up_to) + "]: {";
    for (std::size_t i = 0; i < rs.indices.size(); ++i) {
      line += (i ? ", " : "") + std::to_string(rs.indices[i]);
    }
    line += "}";
    rep.note(line);
  }
  if (rs.decomposition) {
    std::string line = "decomposition: ";
    for (const auto& ap : rs.decomposition->progressions) {
      line += "(start " + std::to_string(ap.start) + ", diff " + std::to_string(ap.difference) +
              ") ";
    }
    line += "residual {";
    for (std::size_t i = 0; i < rs.decomposition->residual.size(); ++i) {
      line += (i ? ", " : "") + std::to_string(rs.decomposition->residual[i]);
    }
    line += "}";
    rep.note(line);
  } else {
    rep.note("no decomposition within the scan");
  }
  rep.table_headers({"n", "on subvariety"});
  std::size_t k = 0;
  for (int n = 1; n <= rs.scanned_up_to; ++n) {
    const bool member = k < rs.indices.size() && rs.indices[k] == n;
    if (member) ++k;
    rep.table_row({std::to_string(n), member ? "yes" : "no"});
  }
  emit(rep, cfg);
  return 0;
}

int run_density(const MapInput& in, const std::string& point, int degree, int count,
                const RunConfig& cfg) {
  MapDocument::Built built = in.load();
  const AffinePolyMap& f = built.affine("density");
  OrbitOptions opt;
  opt.coordinate_digit_cap = cfg.coordinate_digit_cap;
  if (count <= 0) {
    // Smallest meaningful sample: one point per curve coefficient.
    std::size_t monos = 1;
    for (int k = 1; k <= degree; ++k) {
      monos = monos * (f.dimension() + k) / k;  // C(degree + N, N) built up
    }
    count = static_cast<int>(monos);
  }
  OrbitRecord rec = forward_orbit(f, AffinePoint::parse(point), count - 1, opt, built.label);
  CurveWitness w = invariant_curve_search(rec.affine_points, degree, f.vars());

  Report rep;
  rep.json["command"] = "density";
  rep.json["map"] = built.label;
  rep.json["point"] = point;
  rep.json["orbit_points"] = w.points_used;
  rep.json["degree_bound"] = w.degree_bound;
  rep.json["monomials"] = w.monomial_count;
  switch (w.status) {
    case CurveWitness::Status::CurveFound:
      rep.json["status"] = "curve-found";
      rep.json["curve"] = w.curve->to_string();
      rep.note("curve of degree <= " + std::to_string(degree) + " through all " +
               std::to_string(w.points_used) + " orbit points: " + w.curve->to_string());
      break;
    case CurveWitness::Status::NoneCertified:
      rep.json["status"] = "none";
      rep.json["certificate"] = w.certificate;
      rep.note("no curve of degree <= " + std::to_string(degree) + " contains the " +
               std::to_string(w.points_used) + " orbit points (" + w.certificate + ")");
      break;
    case CurveWitness::Status::Inconclusive:
      rep.json["status"] = "inconclusive";
      rep.json["certificate"] = w.certificate;
      rep.note("inconclusive: " + w.certificate);
      break;
  }
  rep.note("map: " + built.label);
  emit(rep, cfg);
  return 0;
}

int run_lemma(double zeta, double d1, double d2, double C, const RunConfig& cfg) {
  LemmaConstants c = lemma_constants(zeta, d1, d2, C);
  LemmaResiduals r = lemma_residuals(c);

  Report rep;
  rep.json["command"] = "lemma";
  rep.json["zeta"] = json_real(zeta);
  rep.json["d1"] = json_real(d1);
  rep.json["d2"] = json_real(d2);
  rep.json["C"] = json_real(C);
  rep.json["alpha"] = json_real(static_cast<double>(c.alpha));
  rep.json["beta"] = json_real(static_cast<double>(c.beta));
  rep.json["residuals"] = {{"alpha_identity", json_real(static_cast<double>(r.alpha_identity))},
                           {"beta_identity", json_real(static_cast<double>(r.beta_identity))},
                           {"cross", json_real(static_cast<double>(r.cross))}};
  rep.table_headers({"quantity", "value"});
  rep.table_row({"alpha", format_real(c.alpha)});
  rep.table_row({"beta", format_real(c.beta)});
  rep.table_row({"residual alpha/d1 + 1/(alpha d2) - zeta", format_real(r.alpha_identity)});
  rep.table_row({"residual beta/d2 + 1/(beta d1) - zeta", format_real(r.beta_identity)});
  rep.table_row({"residual alpha d2 - beta d1", format_real(r.cross)});
  emit(rep, cfg);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact experiments with the arithmetic of rational self-maps"};
  app.require_subcommand(1);

  RunConfig cfg;
  try {
    cfg = RunConfig::from_environment();
  } catch (const Error& e) {
    std::cerr << "error (config): " << e.what() << "\n";
    return 3;
  }

  std::string format = fmt_name(cfg.format);
  app.add_option("--format", format, "output format: table, json, csv")->capture_default_str();
  app.add_option("--seed", cfg.seed, "deterministic seed")->capture_default_str();

  MapInput map_in;
  std::string point;
  std::vector<std::string> curves;
  int density_degree = 2;
  int density_count = 0;
  double lemma_args[4] = {0, 0, 0, 1};

  CLI::App* c_zoo = app.add_subcommand("zoo", "list the built-in map families");

  CLI::App* c_degseq = app.add_subcommand("degseq", "degrees of the saturated iterates");
  add_map_options(c_degseq, map_in);
  c_degseq->add_option("--nmax", cfg.n_max, "iterates to compute")->capture_default_str();
  c_degseq->add_option("--term-cap", cfg.term_count_cap, "term-count cap")->capture_default_str();

  CLI::App* c_dyndeg = app.add_subcommand("dyndeg", "first dynamical degree estimate");
  add_map_options(c_dyndeg, map_in);
  c_dyndeg->add_option("--nmax", cfg.n_max, "iterates to compute")->capture_default_str();
  c_dyndeg->add_option("--term-cap", cfg.term_count_cap, "term-count cap")->capture_default_str();

  CLI::App* c_topdeg = app.add_subcommand("topdeg", "topological degree");
  add_map_options(c_topdeg, map_in);
  c_topdeg->add_option("--primes", cfg.prime_count, "primes to sample")->capture_default_str();
  c_topdeg->add_option("--samples", cfg.samples_per_prime, "samples per prime")
      ->capture_default_str();
  c_topdeg->add_option("--prime-min", cfg.prime_min, "smallest prime considered")
      ->capture_default_str();
  c_topdeg->add_option("--prime-cap", cfg.prime_cap, "largest prime considered")
      ->capture_default_str();
  c_topdeg->add_flag("--force-sampling", cfg.force_sampling,
                     "skip the exact dispatch and sample fibers");

  CLI::App* c_orbit = app.add_subcommand("orbit", "forward orbit with exact heights");
  add_map_options(c_orbit, map_in);
  c_orbit->add_option("--point", point, "start point, e.g. \"(1,2)\" or \"[1:2:1]\"")->required();
  c_orbit->add_option("--nmax", cfg.n_max, "steps to iterate")->capture_default_str();
  c_orbit->add_option("--digit-cap", cfg.coordinate_digit_cap,
                      "stop when coordinates exceed this many digits")
      ->capture_default_str();

  CLI::App* c_arith = app.add_subcommand("arithdeg", "arithmetic degree estimators");
  add_map_options(c_arith, map_in);
  c_arith->add_option("--point", point, "start point")->required();
  c_arith->add_option("--nmax", cfg.n_max, "steps to iterate")->capture_default_str();
  c_arith->add_option("--tail", cfg.tail_window, "tail window (0 = last third)")
      ->capture_default_str();
  c_arith->add_option("--digit-cap", cfg.coordinate_digit_cap, "coordinate digit cap")
      ->capture_default_str();

  CLI::App* c_periodic = app.add_subcommand("periodic", "bounded-height periodic point survey");
  add_map_options(c_periodic, map_in);
  double hb = 0.0;
  long long mc = 0;
  c_periodic->add_option("--height-bound", hb, "height bound (natural log scale)");
  c_periodic->add_option("--max-coord", mc, "exact bound on the closure max coordinate");
  c_periodic->add_option("--period-bound", cfg.period_bound, "largest period certified")
      ->capture_default_str();
  c_periodic->add_option("--enum-cap", cfg.enumeration_cap, "enumeration tuple cap")
      ->capture_default_str();

  CLI::App* c_dml = app.add_subcommand("dml", "orbit return times into a subvariety");
  add_map_options(c_dml, map_in);
  c_dml->add_option("--point", point, "start point")->required();
  c_dml->add_option("--subvariety", curves, "defining polynomial (repeat for an intersection)")
      ->required();
  c_dml->add_option("--nmax", cfg.n_max, "steps to scan")->capture_default_str();

  CLI::App* c_density =
      app.add_subcommand("density", "probe Zariski density: curves through the orbit");
  add_map_options(c_density, map_in);
  c_density->add_option("--point", point, "start point")->required();
  c_density->add_option("--degree", density_degree, "curve degree bound")->capture_default_str();
  c_density->add_option("--count", density_count,
                        "orbit points to use (0 = one per curve coefficient)");
  c_density->add_option("--digit-cap", cfg.coordinate_digit_cap, "coordinate digit cap")
      ->capture_default_str();

  CLI::App* c_lemma =
      app.add_subcommand("lemma", "constants of the two-term height recursion");
  c_lemma->add_option("zeta", lemma_args[0], "zeta > 1/d1 + 1/d2")->required();
  c_lemma->add_option("d1", lemma_args[1], "d1 > 0")->required();
  c_lemma->add_option("d2", lemma_args[2], "d2 > 0")->required();
  c_lemma->add_option("C", lemma_args[3], "C > 0")->required();

  // Global options (--format, --seed) may appear after the subcommand too.
  for (CLI::App* sub : app.get_subcommands(nullptr)) sub->fallthrough();

  CLI11_PARSE(app, argc, argv);

  try {
    cfg.format = parse_format(format);
    if (c_periodic->parsed()) {
      if (mc > 0) cfg.max_coord = mc;
      if (c_periodic->count("--height-bound") > 0) cfg.height_bound = hb;
      if (!cfg.max_coord && !cfg.height_bound) {
        fail(ErrorKind::Parameter, "periodic needs --height-bound or --max-coord");
      }
    }

    if (c_zoo->parsed()) return run_zoo(cfg);
    if (c_degseq->parsed()) return run_degseq(map_in, cfg, false);
    if (c_dyndeg->parsed()) return run_degseq(map_in, cfg, true);
    if (c_topdeg->parsed()) return run_topdeg(map_in, cfg);
    if (c_orbit->parsed()) return run_orbit(map_in, point, cfg);
    if (c_arith->parsed()) return run_arithdeg(map_in, point, cfg);
    if (c_periodic->parsed()) return run_periodic(map_in, cfg);
    if (c_dml->parsed()) return run_dml(map_in, point, curves, cfg);
    if (c_density->parsed()) return run_density(map_in, point, density_degree, density_count, cfg);
    if (c_lemma->parsed()) {
      return run_lemma(lemma_args[0], lemma_args[1], lemma_args[2], lemma_args[3], cfg);
    }
  } catch (const Error& e) {
    const char* kind = "error";
    int code = 1;
    switch (e.kind()) {
      case ErrorKind::Parse: kind = "parse error"; code = 2; break;
      case ErrorKind::Parameter: kind = "parameter error"; code = 3; break;
      case ErrorKind::Resource: kind = "resource limit"; code = 4; break;
      case ErrorKind::Unsupported: kind = "unsupported"; code = 5; break;
      case ErrorKind::Structural: kind = "structural error"; code = 6; break;
    }
    std::cerr << kind << ": " << e.what() << "\n";
    return code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

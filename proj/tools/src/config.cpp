#include "config.hpp"

#include <cstdio>
#include <fstream>
#include <numbers>

#include "heatdens/errors.hpp"

namespace heatdens::cli {

using nlohmann::json;

namespace {

double number(const json& j, const char* key, const std::string& where) {
  if (!j.contains(key) || !j.at(key).is_number())
    throw InvalidParameter(where + ": missing numeric field '" + key + "'");
  return j.at(key).get<double>();
}

double number_or(const json& j, const char* key, double fallback, const std::string& where) {
  if (!j.contains(key)) return fallback;
  if (!j.at(key).is_number()) throw InvalidParameter(where + ": field '" + key + "' must be a number");
  return j.at(key).get<double>();
}

BoundaryValue parse_boundary(const json& j, const std::string& where) {
  if (j.is_number()) return BoundaryValue::deterministic(j.get<double>());
  if (j.is_object()) return BoundaryValue::random(parse_distribution(j));
  throw InvalidParameter(where + ": expected a number or a distribution object");
}

KLProcess parse_psi(const json& j) {
  if (!j.is_object()) throw InvalidParameter("problem.psi must be an object");
  const Distribution xi =
      j.contains("xi") ? parse_distribution(j.at("xi")) : Distribution::normal(0.0, 1.0);
  const int terms = static_cast<int>(number_or(j, "terms", 200, "problem.psi"));
  if (!j.contains("eigenvalues")) throw InvalidParameter("problem.psi: missing 'eigenvalues'");
  const json& e = j.at("eigenvalues");
  if (e.is_array()) return KLProcess::explicit_list(e.get<std::vector<double>>(), xi);
  if (e.is_string()) {
    const auto s = e.get<std::string>();
    if (s == "brownian_bridge") return KLProcess::brownian_bridge(xi, terms);
    if (s == "log_damped") return KLProcess::log_damped(xi, terms);
    throw InvalidParameter("problem.psi: unknown eigenvalue rule '" + s + "'");
  }
  throw InvalidParameter("problem.psi.eigenvalues must be a rule name or a list");
}

}  // namespace

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

// The output block only says where files go, so it is left out of the hash.
std::uint64_t RunConfig::hash() const {
  nlohmann::json j = source;
  j.erase("output");
  return fnv1a(j.dump());
}

std::string RunConfig::hash_hex() const {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash()));
  return buf;
}

Distribution parse_distribution(const json& j) {
  if (!j.is_object() || !j.contains("family") || !j.at("family").is_string())
    throw InvalidParameter("distribution must be an object with a 'family' string");
  const auto f = j.at("family").get<std::string>();
  const std::string w = "distribution '" + f + "'";
  if (f == "uniform") return Distribution::uniform(number(j, "lo", w), number(j, "hi", w));
  if (f == "normal")
    return Distribution::normal(number_or(j, "mean", 0.0, w), number_or(j, "variance", 1.0, w));
  if (f == "gamma") return Distribution::gamma(number(j, "shape", w), number(j, "rate", w));
  if (f == "beta") return Distribution::beta(number(j, "a", w), number(j, "b", w));
  if (f == "triangular")
    return Distribution::triangular(number(j, "lo", w), number(j, "mode", w), number(j, "hi", w));
  if (f == "truncated_exponential")
    return Distribution::truncated_exponential(number(j, "rate", w), number(j, "lo", w),
                                               number(j, "hi", w));
  if (f == "quartic") return Distribution::quartic();
  if (f == "scaled_shifted") {
    if (!j.contains("inner")) throw InvalidParameter(w + ": missing 'inner'");
    return Distribution::scaled_shifted(parse_distribution(j.at("inner")),
                                        number_or(j, "scale", 1.0, w),
                                        number_or(j, "shift", 0.0, w));
  }
  throw InvalidParameter("unknown distribution family '" + f + "'");
}

HeatProblem parse_problem(const json& j) {
  if (!j.is_object()) throw InvalidParameter("'problem' block must be an object");
  for (const char* k : {"alpha2", "bc_A", "bc_B", "psi"})
    if (!j.contains(k)) throw InvalidParameter(std::string("problem: missing '") + k + "'");
  return HeatProblem(number(j, "L1", "problem"), number(j, "L2", "problem"),
                     parse_distribution(j.at("alpha2")), parse_boundary(j.at("bc_A"), "problem.bc_A"),
                     parse_boundary(j.at("bc_B"), "problem.bc_B"), parse_psi(j.at("psi")));
}

Estimator parse_estimator(const std::string& s) {
  if (s == "quad" || s == "quadrature") return Estimator::Quadrature;
  if (s == "mc" || s == "expectation_mc") return Estimator::ExpectationMC;
  if (s == "auto") return Estimator::Auto;
  throw InvalidParameter("unknown estimator '" + s + "' (expected quad, mc or auto)");
}

const char* estimator_flag(Estimator e) {
  switch (e) {
    case Estimator::Quadrature: return "quad";
    case Estimator::ExpectationMC: return "mc";
    case Estimator::Auto: return "auto";
  }
  return "auto";
}

RunConfig parse_config(const json& doc) {
  if (!doc.is_object()) throw InvalidParameter("config must be a JSON object");
  if (!doc.contains("problem") || !doc.contains("run"))
    throw InvalidParameter("config needs 'problem' and 'run' blocks");
  const json& r = doc.at("run");
  RunSpec run;
  run.x = number(r, "x", "run");
  run.t = number(r, "t", "run");
  if (!r.contains("N")) throw InvalidParameter("run: missing 'N'");
  run.N = r.at("N").is_array() ? r.at("N").get<std::vector<int>>()
                               : std::vector<int>{r.at("N").get<int>()};
  if (run.N.empty()) throw InvalidParameter("run.N must be nonempty");
  for (int n : run.N)
    if (n < 1) throw InvalidParameter("run.N entries must be >= 1");
  if (!r.contains("seed") || !r.at("seed").is_number_integer() ||
      (!r.at("seed").is_number_unsigned() && r.at("seed").get<std::int64_t>() < 0))
    throw InvalidParameter("run: a nonnegative integer 'seed' is required");
  run.seed = r.at("seed").get<std::uint64_t>();
  if (r.contains("grid")) {
    const json& g = r.at("grid");
    run.grid.points = static_cast<std::size_t>(number_or(g, "points", 401, "run.grid"));
    if (g.contains("lo")) run.grid.lo = number(g, "lo", "run.grid");
    if (g.contains("hi")) run.grid.hi = number(g, "hi", "run.grid");
    if (run.grid.lo.has_value() != run.grid.hi.has_value())
      throw InvalidParameter("run.grid: give both 'lo' and 'hi' or neither");
    if (run.grid.points < 2) throw InvalidParameter("run.grid.points must be >= 2");
  }
  if (r.contains("estimator")) run.estimator = parse_estimator(r.at("estimator").get<std::string>());
  run.samples = static_cast<std::size_t>(number_or(r, "samples", 1e6, "run"));
  run.paths = static_cast<int>(number_or(r, "paths", 3, "run"));
  run.path_terms = static_cast<int>(number_or(r, "path_terms", 200, "run"));
  run.path_points = static_cast<std::size_t>(number_or(r, "path_points", 301, "run"));

  OutputSpec out;
  if (doc.contains("output") && doc.at("output").contains("directory"))
    out.directory = doc.at("output").at("directory").get<std::string>();

  return RunConfig{doc, parse_problem(doc.at("problem")), run, out};
}

RunConfig load_config(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw InvalidParameter("cannot open config file " + file.string());
  json doc;
  try {
    doc = json::parse(in, nullptr, true, true);
  } catch (const json::parse_error& e) {
    throw InvalidParameter("config " + file.string() + ": " + e.what());
  }
  return parse_config(doc);
}

std::vector<std::string> preset_names() { return {"example1", "example2", "example3", "example4"}; }

nlohmann::json preset_json(const std::string& name) {
  const json uniform12 = {{"family", "uniform"}, {"lo", 1.0}, {"hi", 2.0}};
  const json bridge = {{"eigenvalues", "brownian_bridge"},
                       {"xi", {{"family", "normal"}, {"mean", 0.0}, {"variance", 1.0}}}};
  const json damped = {{"eigenvalues", "log_damped"}, {"xi", {{"family", "quartic"}}}};
  const json run_a = {{"x", 5.0}, {"t", 0.2}, {"N", {1, 2, 3, 4}}, {"seed", 20240601},
                      {"samples", 1000000}, {"paths", 3}};
  const json run_b = {{"x", 1.0}, {"t", 0.1}, {"N", {1, 2, 3, 4}}, {"seed", 20240601},
                      {"samples", 1000000}, {"paths", 3}};
  const double L2b = 2.0 * std::numbers::pi + 1.0;

  json problem;
  json run;
  if (name == "example1") {
    problem = {{"L1", 0.0}, {"L2", 6.0}, {"alpha2", uniform12}, {"bc_A", -3.0}, {"bc_B", 3.0},
               {"psi", bridge}};
    run = run_a;
  } else if (name == "example2") {
    problem = {{"L1", -8.0}, {"L2", L2b}, {"alpha2", uniform12}, {"bc_A", -1.0}, {"bc_B", 2.0},
               {"psi", damped}};
    run = run_b;
  } else if (name == "example3") {
    problem = {{"L1", 0.0},
               {"L2", 6.0},
               {"alpha2", uniform12},
               {"bc_A", {{"family", "triangular"}, {"lo", -5.0}, {"mode", -3.0}, {"hi", -2.0}}},
               {"bc_B",
                {{"family", "truncated_exponential"}, {"rate", 0.5}, {"lo", 3.0}, {"hi", 5.0}}},
               {"psi", bridge}};
    run = run_a;
  } else if (name == "example4") {
    problem = {{"L1", -8.0},
               {"L2", L2b},
               {"alpha2", uniform12},
               {"bc_A", {{"family", "uniform"}, {"lo", -1.5}, {"hi", -0.5}}},
               {"bc_B", {{"family", "normal"}, {"mean", 2.0}, {"variance", 1.0}}},
               {"psi", damped}};
    run = run_b;
  } else {
    throw InvalidParameter("unknown preset '" + name + "' (expected example1..example4)");
  }
  return {{"problem", problem}, {"run", run}, {"output", {{"directory", "out/" + name}}}};
}

}  // namespace heatdens::cli

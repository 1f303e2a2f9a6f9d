#pragma once

// Run configuration: a JSON document with `problem`, `run` and `output`
// blocks. A boundary value given as a bare number is deterministic; an
// object is a distribution.
//
// {
//   "problem": {
//     "L1": 0, "L2": 6,
//     "alpha2": {"family": "uniform", "lo": 1, "hi": 2},
//     "bc_A": -3,
//     "bc_B": {"family": "truncated_exponential", "rate": 0.5, "lo": 3, "hi": 5},
//     "psi": {"eigenvalues": "brownian_bridge", "xi": {"family": "normal"}}
//   },
//   "run": {"x": 5, "t": 0.2, "N": [1, 2, 3, 4], "seed": 1},
//   "output": {"directory": "out"}
// }

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "heatdens/density.hpp"
#include "heatdens/heat_problem.hpp"

namespace heatdens::cli {

struct GridSpec {
  std::size_t points = 401;
  std::optional<double> lo;
  std::optional<double> hi;
};

struct RunSpec {
  double x = 0.0;
  double t = 0.0;
  std::vector<int> N;
  GridSpec grid;
  Estimator estimator = Estimator::Auto;
  std::size_t samples = 1'000'000;
  std::uint64_t seed = 0;
  int paths = 3;
  int path_terms = 200;
  std::size_t path_points = 301;
};

struct OutputSpec {
  std::filesystem::path directory = "out";
};

struct RunConfig {
  nlohmann::json source;  // normalized document the run was built from
  HeatProblem problem;
  RunSpec run;
  OutputSpec output;

  /// FNV-1a 64 of the problem and run blocks.
  std::uint64_t hash() const;
  std::string hash_hex() const;
};

Distribution parse_distribution(const nlohmann::json& j);
HeatProblem parse_problem(const nlohmann::json& j);
RunConfig parse_config(const nlohmann::json& j);
RunConfig load_config(const std::filesystem::path& file);

/// Presets example1..example4.
nlohmann::json preset_json(const std::string& name);
std::vector<std::string> preset_names();

/// Parses `quad`, `mc`, `auto` (and the long names).
Estimator parse_estimator(const std::string& s);
const char* estimator_flag(Estimator e);

std::uint64_t fnv1a(const std::string& s);

}  // namespace heatdens::cli

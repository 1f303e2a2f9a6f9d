#pragma once

#include <optional>
#include <string>
#include <vector>

#include "heatdens/errors.hpp"
#include "heatdens/heat_problem.hpp"

namespace heatdens {

/// Convergence theorems for the density of u_N.
///   Super        uniform convergence, random boundary values
///   SuperLlei    pointwise convergence, random boundary values
///   SuperDet     uniform convergence, deterministic boundary values
///   SuperDetLlei pointwise convergence, deterministic boundary values
enum class Theorem { Super, SuperLlei, SuperDet, SuperDetLlei };
const char* to_string(Theorem th);

enum class BoundaryKind { Random, Deterministic, Mixed };

/// Inputs of the applicability table, separated from their derivation so the
/// table itself can be tested exhaustively.
struct HypothesisFacts {
  Tri hip_a = Tri::Unknown;
  Tri hip_a2 = Tri::Unknown;
  Tri lipschitz = Tri::Unknown;
  Tri bounded_ae_cont = Tri::Unknown;
  BoundaryKind boundaries = BoundaryKind::Deterministic;
  bool nu1_positive = true;
};

struct TheoremReport {
  Tri hip_a_holds = Tri::Unknown;
  Tri hip_a2_holds = Tri::Unknown;
  Tri f_A1_lipschitz = Tri::Unknown;
  std::optional<double> lipschitz_constant;
  Tri f_A1_bounded_ae_cont = Tri::Unknown;
  std::vector<Theorem> applicable;  // empty means none applies
  std::vector<std::string> notes;

  bool applies(Theorem th) const;
  /// Human-readable block followed by `key=value` lines.
  std::string render() const;
};

/// sum_n E[exp(-(n^2 - 2) pi^2 alpha^2 t / len^2)] < infinity.
Tri check_hip_a(const Distribution& alpha2, double t, double len);
/// E[exp(pi^2 alpha^2 t / len^2)] < infinity.
Tri check_hip_a2(const Distribution& alpha2, double t, double len);

std::vector<Theorem> applicable_theorems(const HypothesisFacts& f);
TheoremReport classify(const HeatProblem& p, double t);

}  // namespace heatdens

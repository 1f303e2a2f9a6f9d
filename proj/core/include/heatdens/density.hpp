#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "heatdens/heat_problem.hpp"

namespace heatdens {

enum class Estimator { Auto, Quadrature, ExpectationMC };
const char* to_string(Estimator e);

struct DensityOptions {
  /// Auto picks Quadrature up to `quadrature_max_N` and ExpectationMC beyond.
  Estimator estimator = Estimator::Auto;
  int quadrature_max_N = 6;
  /// Relative tolerance of every quadrature level.
  double rel_tol = 1e-6;
  /// Spline nodes for tabulated intermediate convolutions.
  std::size_t table_points = 1025;
  /// Fully nested quadrature without tabulation (slow; for cross-checks).
  bool nested = false;

  std::size_t mc_samples = 1'000'000;
  std::uint64_t seed = 1;
  /// Fixed chunk count for the MC estimator; substream c feeds chunk c.
  std::size_t mc_chunks = 64;

  /// Nodes of the cached f_vN spline used inside boundary convolutions.
  std::size_t interp_points = 601;
  /// Unbounded boundary laws are truncated to [q(mass), q(1 - mass)].
  double bc_tail_mass = 1e-8;
};

struct DensityCurve {
  double x = 0.0;
  double t = 0.0;
  int N = 0;
  std::vector<double> grid;
  std::vector<double> values;
  Estimator estimator = Estimator::Quadrature;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  std::optional<std::vector<double>> std_err;
  std::vector<std::string> notes;

  /// Trapezoid integral of the curve over its grid.
  double mass() const;
};

/// Density of v_N(y, t) for the canonical problem on the given grid.
DensityCurve density_vN(const CanonicalProblem& cp, double y, double t, int N,
                        std::span<const double> v_grid, const DensityOptions& opt = {});

/// Deterministic boundary values: f_uN(u) = f_vN(u - shift).
DensityCurve density_uN_det(const HeatProblem& p, double x, double t, int N,
                            std::span<const double> u_grid, const DensityOptions& opt = {});

/// At least one random boundary value: f_vN convolved with the scaled
/// boundary laws.
DensityCurve density_uN_random(const HeatProblem& p, double x, double t, int N,
                               std::span<const double> u_grid, const DensityOptions& opt = {});

/// Dispatches on the boundary-value kinds.
DensityCurve density_uN(const HeatProblem& p, double x, double t, int N,
                        std::span<const double> u_grid, const DensityOptions& opt = {});

/// A priori sup-norm error bound of f_uN against the limit density. Empty
/// when f_A1 has no Lipschitz constant or alpha^2 has no MGF.
std::optional<double> tail_bound(const HeatProblem& p, double x, double t, int N);

/// Var[u_N(x, t)] in closed form through the MGF of alpha^2; empty without one.
std::optional<double> uN_variance(const HeatProblem& p, double x, double t, int N);

/// `points` equispaced nodes over mean +- 6 sd of u_N(x, t). The sd is exact
/// when alpha^2 has an MGF and comes from 1e4 pilot draws otherwise.
std::vector<double> default_grid(const HeatProblem& p, double x, double t, int N,
                                 std::size_t points = 401, std::uint64_t seed = 1);

std::vector<double> linspace(double a, double b, std::size_t n);
double trapezoid(std::span<const double> x, std::span<const double> f);
/// max_i |a_i - b_i| for curves on the same grid.
double sup_diff(const DensityCurve& a, const DensityCurve& b);

}  // namespace heatdens

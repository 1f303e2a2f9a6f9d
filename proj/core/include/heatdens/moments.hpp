#pragma once

#include <cstdint>

#include "heatdens/density.hpp"
#include "heatdens/heat_problem.hpp"

namespace heatdens {

struct CurveMoments {
  double mean = 0.0;
  double variance = 0.0;
  double mass = 0.0;
};

/// Trapezoid integrals of u f and u^2 f over the curve grid (no
/// renormalization). Throws MassDeficit when the mass is below 0.98.
CurveMoments moments_from_density(const DensityCurve& curve);

struct SampleMoments {
  double mean = 0.0;
  double mean_se = 0.0;
  double variance = 0.0;
  double variance_se = 0.0;
  std::size_t samples = 0;
};

/// Mean and unbiased variance with jackknife standard errors.
SampleMoments sample_moments(std::span<const double> x);

/// Moments of u_N(x, t) from `samples` direct series draws.
SampleMoments moments_mc(const HeatProblem& p, double x, double t, int N, std::size_t samples,
                         std::uint64_t seed);

struct MomentReport {
  int N = 0;
  double mean_density = 0.0;
  double var_density = 0.0;
  double grid_mass = 0.0;
  SampleMoments mc;
};

MomentReport moment_report(const DensityCurve& curve, const SampleMoments& mc);

}  // namespace heatdens

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "heatdens/density.hpp"
#include "heatdens/heat_problem.hpp"

namespace heatdens {

struct EmpiricalDistribution {
  std::vector<double> sorted_samples;
  std::vector<double> bin_edges;
  std::vector<std::size_t> counts;
  std::uint64_t seed = 0;
  std::size_t sample_count = 0;

  /// Order statistic at probability q in [0, 1].
  double quantile(double q) const;
};

/// Sorts `samples` and bins them into `bins` equal bins spanning the
/// empirical [0.001, 0.999] quantile range; samples outside are not binned.
EmpiricalDistribution make_empirical(std::vector<double> samples, std::size_t bins = 200,
                                     std::uint64_t seed = 0);

/// Direct draws of u_N(x, t) through the truncated series.
EmpiricalDistribution build_empirical(const HeatProblem& p, double x, double t, int N,
                                      std::size_t samples, std::uint64_t seed,
                                      std::size_t bins = 200);

/// Cumulative trapezoid integral of the curve at its grid nodes.
std::vector<double> curve_cdf(const DensityCurve& curve);

/// sup over samples of |F_emp - F_curve|, with F_curve linear between nodes.
/// Throws RangeMismatch when more than 0.1% of the samples lie off the grid.
double ks_distance(const EmpiricalDistribution& emp, const DensityCurve& curve);

/// Asymptotic one-sample Kolmogorov critical value sqrt(-ln(alpha/2)/2)/sqrt(n).
double ks_critical_value(std::size_t n, double alpha);

struct HistogramCheck {
  double max_z = 0.0;  // max |observed - expected| / sqrt(expected)
  std::size_t worst_bin = 0;
  double expected = 0.0;
  double observed = 0.0;
  std::size_t bins_used = 0;
};

/// Compares histogram counts with n times the curve mass per bin. Bins with
/// fewer than `min_expected` expected counts are skipped.
HistogramCheck histogram_deviation(const EmpiricalDistribution& emp, const DensityCurve& curve,
                                   double min_expected = 5.0);

/// `points` equispaced nodes over the hull of `base` and the empirical
/// [tail, 1 - tail] quantile range.
std::vector<double> covering_grid(std::span<const double> base, const EmpiricalDistribution& emp,
                                  std::size_t points, double tail = 1e-4);

}  // namespace heatdens

#include "heatdens/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "heatdens/errors.hpp"
#include "heatdens/series.hpp"

namespace heatdens {

namespace {

// Linear interpolation of node values `F` on `grid`; flat outside.
double interp(const std::vector<double>& grid, const std::vector<double>& F, double u) {
  if (u <= grid.front()) return 0.0;
  if (u >= grid.back()) return F.back();
  const auto it = std::upper_bound(grid.begin(), grid.end(), u);
  const std::size_t i = static_cast<std::size_t>(it - grid.begin());
  const double w = (u - grid[i - 1]) / (grid[i] - grid[i - 1]);
  return F[i - 1] + w * (F[i] - F[i - 1]);
}

}  // namespace

double EmpiricalDistribution::quantile(double q) const {
  if (sorted_samples.empty()) throw InvalidParameter("empty empirical distribution");
  q = std::clamp(q, 0.0, 1.0);
  const auto n = sorted_samples.size();
  const auto i = std::min<std::size_t>(n - 1, static_cast<std::size_t>(q * static_cast<double>(n)));
  return sorted_samples[i];
}

EmpiricalDistribution make_empirical(std::vector<double> samples, std::size_t bins,
                                     std::uint64_t seed) {
  if (samples.empty()) throw InvalidParameter("no samples");
  EmpiricalDistribution e;
  std::sort(samples.begin(), samples.end());
  e.sorted_samples = std::move(samples);
  e.sample_count = e.sorted_samples.size();
  e.seed = seed;
  if (bins > 0) {
    const double lo = e.quantile(0.001);
    double hi = e.quantile(0.999);
    if (!(hi > lo)) hi = lo + 1.0;
    const double h = (hi - lo) / static_cast<double>(bins);
    e.bin_edges.resize(bins + 1);
    for (std::size_t i = 0; i <= bins; ++i) e.bin_edges[i] = lo + h * static_cast<double>(i);
    e.bin_edges[bins] = hi;
    e.counts.assign(bins, 0);
    for (double s : e.sorted_samples) {
      if (s < lo || s >= hi) continue;
      const auto k = std::min<std::size_t>(bins - 1, static_cast<std::size_t>((s - lo) / h));
      ++e.counts[k];
    }
  }
  return e;
}

EmpiricalDistribution build_empirical(const HeatProblem& p, double x, double t, int N,
                                      std::size_t samples, std::uint64_t seed, std::size_t bins) {
  return make_empirical(sample_uN(p, x, t, N, samples, seed), bins, seed);
}

std::vector<double> curve_cdf(const DensityCurve& curve) {
  const auto& u = curve.grid;
  const auto& f = curve.values;
  std::vector<double> F(u.size(), 0.0);
  for (std::size_t i = 1; i < u.size(); ++i)
    F[i] = F[i - 1] + 0.5 * (u[i] - u[i - 1]) * (f[i] + f[i - 1]);
  return F;
}

double ks_distance(const EmpiricalDistribution& emp, const DensityCurve& curve) {
  const auto& s = emp.sorted_samples;
  const auto n = s.size();
  if (n == 0 || curve.grid.size() < 2) throw InvalidParameter("empty input to ks_distance");
  const auto below = static_cast<std::size_t>(
      std::lower_bound(s.begin(), s.end(), curve.grid.front()) - s.begin());
  const auto above = static_cast<std::size_t>(
      s.end() - std::upper_bound(s.begin(), s.end(), curve.grid.back()));
  if (static_cast<double>(below + above) > 1e-3 * static_cast<double>(n)) {
    std::ostringstream os;
    os << below + above << " of " << n << " samples fall outside the curve grid ["
       << curve.grid.front() << ", " << curve.grid.back() << "]";
    throw RangeMismatch(os.str());
  }
  const auto F = curve_cdf(curve);
  const double nn = static_cast<double>(n);
  double d = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double fc = interp(curve.grid, F, s[i]);
    d = std::max({d, std::abs(fc - static_cast<double>(i) / nn),
                  std::abs(fc - static_cast<double>(i + 1) / nn)});
  }
  return d;
}

double ks_critical_value(std::size_t n, double alpha) {
  return std::sqrt(-std::log(alpha / 2.0) / 2.0) / std::sqrt(static_cast<double>(n));
}

HistogramCheck histogram_deviation(const EmpiricalDistribution& emp, const DensityCurve& curve,
                                   double min_expected) {
  const auto F = curve_cdf(curve);
  const double n = static_cast<double>(emp.sample_count);
  HistogramCheck h;
  for (std::size_t k = 0; k < emp.counts.size(); ++k) {
    const double expected =
        n * (interp(curve.grid, F, emp.bin_edges[k + 1]) - interp(curve.grid, F, emp.bin_edges[k]));
    if (expected < min_expected) continue;
    ++h.bins_used;
    const double observed = static_cast<double>(emp.counts[k]);
    const double z = std::abs(observed - expected) / std::sqrt(expected);
    if (z > h.max_z) h = {z, k, expected, observed, h.bins_used};
  }
  return h;
}

std::vector<double> covering_grid(std::span<const double> base, const EmpiricalDistribution& emp,
                                  std::size_t points, double tail) {
  const double lo = std::min(base.front(), emp.quantile(tail));
  const double hi = std::max(base.back(), emp.quantile(1.0 - tail));
  return linspace(lo, hi, points);
}

}  // namespace heatdens

#include "heatdens/moments.hpp"

#include <cmath>
#include <sstream>

#include "heatdens/errors.hpp"
#include "heatdens/series.hpp"

namespace heatdens {

CurveMoments moments_from_density(const DensityCurve& curve) {
  const auto& u = curve.grid;
  const auto& f = curve.values;
  CurveMoments m;
  double m1 = 0.0, m2 = 0.0;
  for (std::size_t i = 1; i < u.size(); ++i) {
    const double h = 0.5 * (u[i] - u[i - 1]);
    m.mass += h * (f[i] + f[i - 1]);
    m1 += h * (u[i] * f[i] + u[i - 1] * f[i - 1]);
    m2 += h * (u[i] * u[i] * f[i] + u[i - 1] * u[i - 1] * f[i - 1]);
  }
  if (m.mass < 0.98) {
    std::ostringstream os;
    os << "density curve mass " << m.mass << " < 0.98; widen the grid";
    throw MassDeficit(os.str());
  }
  m.mean = m1;
  m.variance = m2 - m1 * m1;
  return m;
}

SampleMoments sample_moments(std::span<const double> x) {
  const std::size_t n = x.size();
  if (n < 3) throw InvalidParameter("sample moments need at least 3 samples");
  const double nn = static_cast<double>(n);
  double mean = 0.0;
  for (double v : x) mean += v;
  mean /= nn;
  double ss = 0.0;
  for (double v : x) ss += (v - mean) * (v - mean);

  SampleMoments r;
  r.samples = n;
  r.mean = mean;
  r.variance = ss / (nn - 1.0);
  // Jackknife of the mean reduces to s / sqrt(n).
  r.mean_se = std::sqrt(r.variance / nn);
  // Leave-one-out sums of squares: SS_(i) = SS - n/(n-1) (x_i - mean)^2.
  double jbar = 0.0;
  for (double v : x) jbar += (ss - nn / (nn - 1.0) * (v - mean) * (v - mean)) / (nn - 2.0);
  jbar /= nn;
  double acc = 0.0;
  for (double v : x) {
    const double vi = (ss - nn / (nn - 1.0) * (v - mean) * (v - mean)) / (nn - 2.0);
    acc += (vi - jbar) * (vi - jbar);
  }
  r.variance_se = std::sqrt((nn - 1.0) / nn * acc);
  return r;
}

SampleMoments moments_mc(const HeatProblem& p, double x, double t, int N, std::size_t samples,
                         std::uint64_t seed) {
  const auto s = sample_uN(p, x, t, N, samples, seed);
  return sample_moments(s);
}

MomentReport moment_report(const DensityCurve& curve, const SampleMoments& mc) {
  const CurveMoments m = moments_from_density(curve);
  return {curve.N, m.mean, m.variance, m.mass, mc};
}

}  // namespace heatdens

#include "heatdens/kl_process.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include <boost/math/special_functions/sin_pi.hpp>

#include "heatdens/errors.hpp"
#include "heatdens/quadrature.hpp"

namespace heatdens {

namespace {

constexpr double kPi = std::numbers::pi;
// Partial sums run this far before the integral tail takes over; the
// midpoint tail error is O(J^-4).
constexpr int kTailStart = 10000;

double brownian_bridge_nu(double j) { return 1.0 / (kPi * kPi * j * j); }
double log_damped_nu(double j) { return 1.0 / (j * j * j * (1.0 + std::log(j))); }

void check_standardized(const Distribution& xi) {
  const double m = xi.mean();
  const double v = xi.variance();
  if (std::abs(m) > 1e-9 || std::abs(v - 1.0) > 1e-9) {
    std::ostringstream os;
    os << "KL coefficient law must have mean 0 and variance 1, got " << xi.describe()
       << " with mean " << m << " and variance " << v;
    throw InvalidParameter(os.str());
  }
}

}  // namespace

KLProcess::KLProcess(EigenRule rule, std::vector<double> nu, const Distribution& xi,
                     int default_terms)
    : rule_(rule), nu_(std::move(nu)), xi_(xi), default_terms_(default_terms) {
  check_standardized(xi_);
  if (default_terms_ < 1) throw InvalidParameter("KL default truncation must be >= 1");
}

KLProcess KLProcess::brownian_bridge(const Distribution& xi, int default_terms) {
  return KLProcess(EigenRule::BrownianBridge, {}, xi, default_terms);
}

KLProcess KLProcess::log_damped(const Distribution& xi, int default_terms) {
  return KLProcess(EigenRule::LogDamped, {}, xi, default_terms);
}

KLProcess KLProcess::explicit_list(std::vector<double> nu, const Distribution& xi) {
  if (nu.empty()) throw InvalidParameter("explicit eigenvalue list is empty");
  for (double v : nu)
    if (!(v >= 0.0) || !std::isfinite(v))
      throw InvalidParameter("eigenvalues must be finite and nonnegative");
  const int n = static_cast<int>(nu.size());
  return KLProcess(EigenRule::Explicit, std::move(nu), xi, n);
}

std::string KLProcess::describe() const {
  std::ostringstream os;
  switch (rule_) {
    case EigenRule::BrownianBridge: os << "brownian_bridge"; break;
    case EigenRule::LogDamped: os << "log_damped"; break;
    case EigenRule::Explicit: os << "explicit[" << nu_.size() << "]"; break;
  }
  os << " with xi ~ " << xi_.describe();
  return os.str();
}

double KLProcess::eigenvalue(int j) const {
  if (j < 1) throw InvalidParameter("eigenvalue index must be >= 1");
  switch (rule_) {
    case EigenRule::BrownianBridge: return brownian_bridge_nu(j);
    case EigenRule::LogDamped: return log_damped_nu(j);
    case EigenRule::Explicit:
      return static_cast<std::size_t>(j) <= nu_.size() ? nu_[j - 1] : 0.0;
  }
  return 0.0;
}

double KLProcess::coeff_scale(int n) const { return std::sqrt(2.0 * eigenvalue(n)); }

Distribution KLProcess::fourier_coeff_law(int n) const {
  const double c = coeff_scale(n);
  if (c == 0.0) {
    std::ostringstream os;
    os << "nu_" << n << " = 0: A_" << n << " is the constant 0";
    throw DegenerateCoefficient(os.str());
  }
  return Distribution::scaled_shifted(xi_, c, 0.0);
}

std::vector<double> KLProcess::sample_coeffs(int N, Rng& rng) const {
  if (N < 1) throw InvalidParameter("truncation order must be >= 1");
  std::vector<double> a(N);
  for (int n = 1; n <= N; ++n) a[n - 1] = coeff_scale(n) * xi_.sample(rng);
  return a;
}

std::vector<double> KLProcess::sample_path(std::span<const double> y_grid, int J,
                                           Rng& rng) const {
  const auto a = sample_coeffs(J, rng);
  std::vector<double> path(y_grid.size(), 0.0);
  for (std::size_t i = 0; i < y_grid.size(); ++i) {
    const double y = y_grid[i];
    if (!(y >= 0.0 && y <= 1.0)) throw OutOfDomain("path grid must lie in [0, 1]");
    double s = 0.0;
    for (int j = 1; j <= J; ++j) s += a[j - 1] * boost::math::sin_pi(j * y);
    path[i] = s;
  }
  return path;
}

double KLProcess::eigenvalue_sum() const {
  if (rule_ == EigenRule::Explicit) {
    double s = 0.0;
    for (double v : nu_) s += v;
    return s;
  }
  // Sum small terms first to limit round-off.
  double s = 0.0;
  for (int j = kTailStart; j >= 1; --j) s += eigenvalue(j);
  const double a = kTailStart + 0.5;
  if (rule_ == EigenRule::BrownianBridge) return s + 1.0 / (kPi * kPi * a);
  const double pts[2] = {a, std::numeric_limits<double>::infinity()};
  const auto tail = quad::integrate([](double x) { return log_damped_nu(x); },
                                    std::span<const double>(pts, 2), {1e-18, 1e-10, 500});
  return s + tail.value;
}

}  // namespace heatdens

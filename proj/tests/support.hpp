#pragma once

// Independent numerical oracles for the unit tests. These deliberately use
// Boost's quadrature rather than the library's own integrator.

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

namespace testsupport {

inline double gk(const std::function<double(double)>& f, double a, double b, double tol = 1e-11) {
  return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, a, b, 25, tol);
}

/// Integral over consecutive breakpoints.
inline double gk_pieces(const std::function<double(double)>& f, std::vector<double> pts,
                        double tol = 1e-11) {
  double s = 0.0;
  for (std::size_t i = 1; i < pts.size(); ++i) s += gk(f, pts[i - 1], pts[i], tol);
  return s;
}

/// max |f'| by central differences on a uniform grid.
inline double max_abs_derivative(const std::function<double(double)>& f, double lo, double hi,
                                 double step = 1e-4) {
  double best = 0.0;
  const double h = 1e-6;
  for (double x = lo; x <= hi; x += step)
    best = std::max(best, std::abs(f(x + h) - f(x - h)) / (2.0 * h));
  return best;
}

/// One-sample KS statistic of `s` (sorted in place) against `cdf`.
inline double ks_statistic(std::vector<double>& s, const std::function<double(double)>& cdf) {
  std::sort(s.begin(), s.end());
  const double n = static_cast<double>(s.size());
  double d = 0.0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const double F = cdf(s[i]);
    d = std::max({d, std::abs(F - i / n), std::abs(F - (i + 1) / n)});
  }
  return d;
}

/// Kolmogorov critical value c(alpha) / sqrt(n), alpha = 0.001.
inline double ks_critical_001(std::size_t n) { return 1.9495 / std::sqrt(static_cast<double>(n)); }

inline double mean_of(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x;
  return s / static_cast<double>(v.size());
}

inline double var_of(const std::vector<double>& v) {
  const double m = mean_of(v);
  double s = 0.0;
  for (double x : v) s += (x - m) * (x - m);
  return s / static_cast<double>(v.size() - 1);
}

}  // namespace testsupport

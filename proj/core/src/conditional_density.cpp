#include "conditional_density.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "heatdens/errors.hpp"
#include "heatdens/parallel.hpp"
#include "heatdens/quadrature.hpp"

namespace heatdens::detail {

namespace {

constexpr double kHalfPi = 0.5 * std::numbers::pi;

}  // namespace

double ConditionalDensity::Table::operator()(double w) const {
  if (bounded) {
    if (w <= lo || w >= hi) return 0.0;
    return std::max(0.0, spline(w));
  }
  return std::max(0.0, spline(std::atan(w / scale)));
}

ConditionalDensity::ConditionalDensity(const Distribution& xi, std::vector<double> d,
                                       const StageOptions& opt)
    : xi_(xi), opt_(opt), xi_support_(xi.support()), xi_sd_(std::sqrt(xi.variance())) {
  for (double v : d)
    if (v != 0.0) d_.push_back(v);
  if (d_.empty()) throw DegenerateCoefficient("all series coefficients vanish");
  // Broadest term first: later convolutions then smooth gently.
  std::stable_sort(d_.begin(), d_.end(),
                   [](double a, double b) { return std::abs(a) > std::abs(b); });

  xi_breaks_.push_back(xi_support_.lo);
  for (double k : xi.kinks()) xi_breaks_.push_back(k);
  xi_breaks_.push_back(xi_support_.hi);

  tables_.resize(d_.size() + 1);
  if (!opt_.nested)
    for (std::size_t level = 2; level + 1 <= d_.size(); ++level)
      tables_[level] = build_table(level);
}

double ConditionalDensity::eval(std::size_t level, double w) const {
  if (level == 1) return xi_.pdf(w / d_[0]) / std::abs(d_[0]);
  if (tables_[level]) return (*tables_[level])(w);
  return convolve(level, w);
}

// g_level(w) = integral of g_{level-1}(w - d xi) f_xi(xi) dxi.
double ConditionalDensity::convolve(std::size_t level, double w) const {
  const double d = d_[level - 1];
  std::vector<double> pts = xi_breaks_;
  if (level == 2) {
    // Jumps and kinks of the first stage, pulled back to xi.
    const double d1 = d_[0];
    for (double k : xi_breaks_)
      if (std::isfinite(k)) {
        const double z = (w - d1 * k) / d;
        if (z > xi_support_.lo && z < xi_support_.hi) pts.push_back(z);
      }
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  double s2 = 0.0;
  for (std::size_t j = 0; j < level; ++j) s2 += d_[j] * d_[j];
  const quad::Options qo{1e-10 / (std::sqrt(s2) * xi_sd_), opt_.rel_tol, 400};
  const auto r = quad::integrate(
      [&](double z) {
        const double f = xi_.pdf(z);
        return f == 0.0 ? 0.0 : eval(level - 1, w - d * z) * f;
      },
      std::span<const double>(pts), qo);
  return std::max(0.0, r.value);
}

ConditionalDensity::Table ConditionalDensity::build_table(std::size_t level) const {
  const std::size_t m = std::max<std::size_t>(opt_.table_points, 8);
  std::vector<double> vals(m, 0.0);
  const bool bounded = xi_support_.bounded();
  double lo = 0.0, hi = 0.0, scale = 0.0;
  double left, step;
  if (bounded) {
    for (std::size_t j = 0; j < level; ++j) {
      const double a = d_[j] * xi_support_.lo;
      const double b = d_[j] * xi_support_.hi;
      lo += std::min(a, b);
      hi += std::max(a, b);
    }
    left = lo;
    step = (hi - lo) / static_cast<double>(m - 1);
    parallel_for_index(m - 2, [&](std::size_t i) { vals[i + 1] = convolve(level, lo + (i + 1) * step); });
  } else {
    double s2 = 0.0;
    for (std::size_t j = 0; j < level; ++j) s2 += d_[j] * d_[j];
    scale = std::sqrt(s2) * xi_sd_;
    left = -kHalfPi;
    step = std::numbers::pi / static_cast<double>(m - 1);
    // Endpoints stay 0: the density vanishes at w = +-inf.
    parallel_for_index(m - 2, [&](std::size_t i) {
      vals[i + 1] = convolve(level, scale * std::tan(left + (i + 1) * step));
    });
  }
  Table t{bounded, lo, hi, scale,
          boost::math::interpolators::cardinal_cubic_b_spline<double>(vals.data(), m, left, step)};
  return t;
}

}  // namespace heatdens::detail

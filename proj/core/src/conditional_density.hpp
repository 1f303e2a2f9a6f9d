#pragma once

// Density of sum_k d_k xi_k for i.i.d. xi_k, by repeated one-dimensional
// convolution. Intermediate partial sums are tabulated on a spline grid; the
// last convolution is integrated directly at each requested point.

#include <cstddef>
#include <optional>
#include <vector>

#include <boost/math/interpolators/cardinal_cubic_b_spline.hpp>

#include "heatdens/distribution.hpp"

namespace heatdens::detail {

struct StageOptions {
  double rel_tol = 1e-6;
  std::size_t table_points = 1025;
  /// Evaluate every stage by nested quadrature instead of tabulating.
  bool nested = false;
};

class ConditionalDensity {
 public:
  /// `d` must contain at least one nonzero entry; zero entries are dropped.
  ConditionalDensity(const Distribution& xi, std::vector<double> d, const StageOptions& opt);

  double operator()(double v) const { return eval(d_.size(), v); }
  std::size_t terms() const { return d_.size(); }

 private:
  struct Table {
    bool bounded;
    double lo, hi;  // support of the partial sum when bounded
    double scale;   // w = scale * tan(theta) otherwise
    boost::math::interpolators::cardinal_cubic_b_spline<double> spline;
    double operator()(double w) const;
  };

  // Density of d_1 xi_1 + ... + d_level xi_level at w.
  double eval(std::size_t level, double w) const;
  double convolve(std::size_t level, double w) const;
  Table build_table(std::size_t level) const;

  Distribution xi_;
  std::vector<double> d_;
  StageOptions opt_;
  Support xi_support_;
  std::vector<double> xi_breaks_;  // support ends and kinks of f_xi
  double xi_sd_;
  std::vector<std::optional<Table>> tables_;  // index = level
};

}  // namespace heatdens::detail

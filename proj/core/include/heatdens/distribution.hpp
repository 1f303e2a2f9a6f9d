#pragma once

// Univariate laws used for the diffusion coefficient, the boundary values and
// the standardized Karhunen-Loeve coefficients.

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "heatdens/rng.hpp"

namespace heatdens {

class Distribution;

namespace law {

struct Uniform {
  double lo;
  double hi;
};
struct Normal {
  double mean;
  double variance;
};
/// Shape-rate parameterization: density s^r x^{r-1} e^{-s x} / Gamma(r).
struct Gamma {
  double shape;
  double rate;
};
struct Beta {
  double a;
  double b;
};
struct Triangular {
  double lo;
  double mode;
  double hi;
};
/// Exponential with the given rate, conditioned on [lo, hi].
struct TruncatedExponential {
  double rate;
  double lo;
  double hi;
};
/// Density sqrt(2) / (pi (1 + x^4)): zero mean, unit variance, no MGF.
struct Quartic {};
/// Law of scale * X + shift.
struct ScaledShifted {
  std::shared_ptr<const Distribution> inner;
  double scale;
  double shift;
};

}  // namespace law

struct Support {
  double lo;
  double hi;
  bool bounded() const;
};

/// Immutable univariate distribution. Parameters are validated by the
/// factories; every query afterwards is total (pdf is 0 off-support).
class Distribution {
 public:
  using Family = std::variant<law::Uniform, law::Normal, law::Gamma, law::Beta, law::Triangular,
                              law::TruncatedExponential, law::Quartic, law::ScaledShifted>;

  static Distribution uniform(double lo, double hi);
  static Distribution normal(double mean, double variance);
  static Distribution gamma(double shape, double rate);
  static Distribution beta(double a, double b);
  static Distribution triangular(double lo, double mode, double hi);
  static Distribution truncated_exponential(double rate, double lo, double hi);
  static Distribution quartic();
  /// Law of scale * inner + shift; density f((x - shift) / scale) / |scale|.
  static Distribution scaled_shifted(const Distribution& inner, double scale, double shift);

  const Family& family() const { return family_; }
  std::string name() const;
  std::string describe() const;

  double pdf(double x) const;
  double cdf(double x) const;
  double quantile(double p) const;
  double mean() const;
  double variance() const;

  /// E[exp(lambda X)]. Empty when the family has no closed-form MGF.
  /// Throws DomainError when lambda lies outside the MGF's domain.
  std::optional<double> mgf(double lambda) const;

  double sample(Rng& rng) const;

  Support support() const;
  /// [quantile(mass), quantile(1 - mass)] clipped to the true support.
  Support effective_support(double mass) const;
  /// Interior points where the density is not smooth (e.g. triangular mode).
  std::vector<double> kinks() const;

  /// sup_x f(x); +inf for densities unbounded near a support end.
  double sup_density() const;
  /// Smallest L with |f(x) - f(y)| <= L |x - y|; empty when f has a jump or
  /// an unbounded derivative.
  std::optional<double> lipschitz_constant() const;

  bool is_symmetric_about_zero() const;

 private:
  explicit Distribution(Family f) : family_(std::move(f)) {}
  Family family_;
};

/// Quartic law CDF in closed form (the antiderivative is elementary).
double quartic_cdf(double x);

}  // namespace heatdens

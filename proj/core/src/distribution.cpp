#include "heatdens/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include <boost/math/distributions/beta.hpp>
#include <boost/math/distributions/gamma.hpp>
#include <boost/math/distributions/normal.hpp>
#include <boost/math/special_functions/beta.hpp>
#include <boost/math/special_functions/hypergeometric_1F1.hpp>
#include <boost/random/gamma_distribution.hpp>
#include <boost/random/normal_distribution.hpp>
#include <boost/random/uniform_01.hpp>

#include "heatdens/errors.hpp"

namespace heatdens {

namespace {

namespace bm = boost::math;
using NoThrow = bm::policies::policy<bm::policies::domain_error<bm::policies::ignore_error>,
                                     bm::policies::overflow_error<bm::policies::ignore_error>,
                                     bm::policies::evaluation_error<bm::policies::ignore_error>>;

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kPi = std::numbers::pi;
constexpr double kSqrt2 = std::numbers::sqrt2;

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void require(bool ok, const std::string& what) {
  if (!ok) throw InvalidParameter(what);
}

bool finite(double x) { return std::isfinite(x); }

// Upper tail of the quartic law for x >= 4 via its convergent series
// (sqrt2/pi) sum_k (-1)^k x^{-(4k+3)} / (4k+3).
double quartic_upper_tail_series(double x) {
  const double x4 = x * x * x * x;
  double term = 1.0 / (x * x * x);
  double sum = 0.0;
  for (int k = 0; k < 12; ++k) {
    const double t = term / (4.0 * k + 3.0);
    sum += (k % 2 == 0) ? t : -t;
    term /= x4;
  }
  return kSqrt2 / kPi * sum;
}

double quartic_cdf_closed(double x) {
  const double x2 = x * x;
  const double log_term = std::log((x2 + kSqrt2 * x + 1.0) / (x2 - kSqrt2 * x + 1.0));
  const double atan_term = std::atan(kSqrt2 * x + 1.0) + std::atan(kSqrt2 * x - 1.0);
  return 0.5 + log_term / (4.0 * kPi) + atan_term / (2.0 * kPi);
}

double quartic_pdf(double x) { return kSqrt2 / (kPi * (1.0 + x * x * x * x)); }

// Upper tail Q(x) = 1 - F(x) for x >= 0, accurate in the far tail.
double quartic_upper_tail(double x) {
  return x >= 4.0 ? quartic_upper_tail_series(x) : 1.0 - quartic_cdf_closed(x);
}

// Solves Q(x) = q for x >= 0 with q in (0, 1/2] by safeguarded Newton.
double quartic_upper_quantile(double q) {
  if (q >= 0.5) return 0.0;
  double lo = 0.0;
  double hi = 4.0;
  while (quartic_upper_tail(hi) > q) hi *= 2.0;
  // Tail asymptotics Q(x) ~ sqrt2 / (3 pi x^3) give a good start far out.
  double x = std::cbrt(kSqrt2 / (3.0 * kPi * q));
  if (!(x > lo && x < hi)) x = 0.5 * (lo + hi);
  for (int it = 0; it < 200; ++it) {
    const double g = quartic_upper_tail(x) - q;
    if (g > 0.0) lo = x; else hi = x;
    const double step = g / quartic_pdf(x);  // dQ/dx = -pdf
    double next = x + step;
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (std::abs(next - x) <= 1e-15 * std::max(1.0, std::abs(x))) return next;
    x = next;
  }
  return x;
}

double quartic_quantile(double p) {
  if (p <= 0.0) return -kInf;
  if (p >= 1.0) return kInf;
  if (p >= 0.5) return quartic_upper_quantile(1.0 - p);
  return -quartic_upper_quantile(p);
}

double uniform01(Rng& rng) {
  boost::random::uniform_01<double> u;
  return u(rng);
}

// Open-interval uniform draw, needed by inverse-CDF samplers with infinite
// quantiles at 0.
double uniform_open(Rng& rng) {
  double u;
  do {
    u = uniform01(rng);
  } while (u <= 0.0);
  return u;
}

double triangular_cdf(const law::Triangular& d, double x) {
  if (x <= d.lo) return 0.0;
  if (x >= d.hi) return 1.0;
  const double w = d.hi - d.lo;
  if (x <= d.mode) return (x - d.lo) * (x - d.lo) / (w * (d.mode - d.lo));
  return 1.0 - (d.hi - x) * (d.hi - x) / (w * (d.hi - d.mode));
}

double triangular_quantile(const law::Triangular& d, double p) {
  const double w = d.hi - d.lo;
  const double fc = (d.mode - d.lo) / w;
  if (p < fc) return d.lo + std::sqrt(p * w * (d.mode - d.lo));
  return d.hi - std::sqrt((1.0 - p) * w * (d.hi - d.mode));
}

// Normalizer e^{-k lo} - e^{-k hi} written as e^{-k lo} * (-expm1(-k D)).
double trunc_exp_norm(const law::TruncatedExponential& d) {
  return std::exp(-d.rate * d.lo) * -std::expm1(-d.rate * (d.hi - d.lo));
}

}  // namespace

bool Support::bounded() const { return std::isfinite(lo) && std::isfinite(hi); }

// ---------------------------------------------------------------- factories

Distribution Distribution::uniform(double lo, double hi) {
  require(finite(lo) && finite(hi) && lo < hi, "Uniform requires finite lo < hi");
  return Distribution(law::Uniform{lo, hi});
}

Distribution Distribution::normal(double mean, double variance) {
  require(finite(mean) && finite(variance) && variance > 0.0,
          "Normal requires finite mean and variance > 0");
  return Distribution(law::Normal{mean, variance});
}

Distribution Distribution::gamma(double shape, double rate) {
  require(finite(shape) && finite(rate) && shape > 0.0 && rate > 0.0,
          "Gamma requires shape > 0 and rate > 0");
  return Distribution(law::Gamma{shape, rate});
}

Distribution Distribution::beta(double a, double b) {
  require(finite(a) && finite(b) && a > 0.0 && b > 0.0, "Beta requires a > 0 and b > 0");
  return Distribution(law::Beta{a, b});
}

Distribution Distribution::triangular(double lo, double mode, double hi) {
  require(finite(lo) && finite(mode) && finite(hi) && lo < hi && lo <= mode && mode <= hi,
          "Triangular requires lo <= mode <= hi and lo < hi");
  return Distribution(law::Triangular{lo, mode, hi});
}

Distribution Distribution::truncated_exponential(double rate, double lo, double hi) {
  require(finite(rate) && finite(lo) && finite(hi) && rate > 0.0 && lo < hi,
          "TruncatedExponential requires rate > 0 and lo < hi");
  return Distribution(law::TruncatedExponential{rate, lo, hi});
}

Distribution Distribution::quartic() { return Distribution(law::Quartic{}); }

Distribution Distribution::scaled_shifted(const Distribution& inner, double scale, double shift) {
  require(finite(scale) && finite(shift) && scale != 0.0,
          "ScaledShifted requires a finite nonzero scale and finite shift");
  return Distribution(
      law::ScaledShifted{std::make_shared<const Distribution>(inner), scale, shift});
}

// ---------------------------------------------------------------- naming

std::string Distribution::name() const {
  return std::visit(Overloaded{
                        [](const law::Uniform&) { return std::string("uniform"); },
                        [](const law::Normal&) { return std::string("normal"); },
                        [](const law::Gamma&) { return std::string("gamma"); },
                        [](const law::Beta&) { return std::string("beta"); },
                        [](const law::Triangular&) { return std::string("triangular"); },
                        [](const law::TruncatedExponential&) {
                          return std::string("truncated_exponential");
                        },
                        [](const law::Quartic&) { return std::string("quartic"); },
                        [](const law::ScaledShifted&) { return std::string("scaled_shifted"); },
                    },
                    family_);
}

std::string Distribution::describe() const {
  std::ostringstream os;
  os.precision(10);
  std::visit(Overloaded{
                 [&](const law::Uniform& d) { os << "Uniform(" << d.lo << ", " << d.hi << ")"; },
                 [&](const law::Normal& d) {
                   os << "Normal(" << d.mean << ", " << d.variance << ")";
                 },
                 [&](const law::Gamma& d) { os << "Gamma(" << d.shape << ", " << d.rate << ")"; },
                 [&](const law::Beta& d) { os << "Beta(" << d.a << ", " << d.b << ")"; },
                 [&](const law::Triangular& d) {
                   os << "Triangular(" << d.lo << ", " << d.mode << ", " << d.hi << ")";
                 },
                 [&](const law::TruncatedExponential& d) {
                   os << "TruncatedExponential(" << d.rate << ", " << d.lo << ", " << d.hi << ")";
                 },
                 [&](const law::Quartic&) { os << "Quartic"; },
                 [&](const law::ScaledShifted& d) {
                   os << d.scale << " * " << d.inner->describe() << " + " << d.shift;
                 },
             },
             family_);
  return os.str();
}

// ---------------------------------------------------------------- pdf / cdf

double Distribution::pdf(double x) const {
  return std::visit(
      Overloaded{
          [&](const law::Uniform& d) { return (x < d.lo || x > d.hi) ? 0.0 : 1.0 / (d.hi - d.lo); },
          [&](const law::Normal& d) {
            const double z = (x - d.mean);
            return std::exp(-0.5 * z * z / d.variance) / std::sqrt(2.0 * kPi * d.variance);
          },
          [&](const law::Gamma& d) {
            if (x < 0.0) return 0.0;
            if (x == 0.0) return d.shape < 1.0 ? kInf : (d.shape == 1.0 ? d.rate : 0.0);
            return bm::pdf(bm::gamma_distribution<double, NoThrow>(d.shape, 1.0 / d.rate), x);
          },
          [&](const law::Beta& d) {
            if (x < 0.0 || x > 1.0) return 0.0;
            if ((x == 0.0 && d.a < 1.0) || (x == 1.0 && d.b < 1.0)) return kInf;
            return bm::pdf(bm::beta_distribution<double, NoThrow>(d.a, d.b), x);
          },
          [&](const law::Triangular& d) {
            if (x < d.lo || x > d.hi) return 0.0;
            const double w = d.hi - d.lo;
            if (x < d.mode) return 2.0 * (x - d.lo) / (w * (d.mode - d.lo));
            if (x > d.mode) return 2.0 * (d.hi - x) / (w * (d.hi - d.mode));
            return 2.0 / w;
          },
          [&](const law::TruncatedExponential& d) {
            if (x < d.lo || x > d.hi) return 0.0;
            return d.rate * std::exp(-d.rate * x) / trunc_exp_norm(d);
          },
          [&](const law::Quartic&) { return quartic_pdf(x); },
          [&](const law::ScaledShifted& d) {
            return d.inner->pdf((x - d.shift) / d.scale) / std::abs(d.scale);
          },
      },
      family_);
}

double quartic_cdf(double x) {
  if (x >= 4.0) return 1.0 - quartic_upper_tail_series(x);
  if (x <= -4.0) return quartic_upper_tail_series(-x);
  return quartic_cdf_closed(x);
}

double Distribution::cdf(double x) const {
  return std::visit(
      Overloaded{
          [&](const law::Uniform& d) {
            return x <= d.lo ? 0.0 : x >= d.hi ? 1.0 : (x - d.lo) / (d.hi - d.lo);
          },
          [&](const law::Normal& d) {
            return bm::cdf(bm::normal_distribution<double, NoThrow>(d.mean, std::sqrt(d.variance)),
                           x);
          },
          [&](const law::Gamma& d) {
            if (x <= 0.0) return 0.0;
            return bm::cdf(bm::gamma_distribution<double, NoThrow>(d.shape, 1.0 / d.rate), x);
          },
          [&](const law::Beta& d) {
            if (x <= 0.0) return 0.0;
            if (x >= 1.0) return 1.0;
            return bm::cdf(bm::beta_distribution<double, NoThrow>(d.a, d.b), x);
          },
          [&](const law::Triangular& d) { return triangular_cdf(d, x); },
          [&](const law::TruncatedExponential& d) {
            if (x <= d.lo) return 0.0;
            if (x >= d.hi) return 1.0;
            return std::expm1(-d.rate * (x - d.lo)) / std::expm1(-d.rate * (d.hi - d.lo));
          },
          [&](const law::Quartic&) { return quartic_cdf(x); },
          [&](const law::ScaledShifted& d) {
            const double z = (x - d.shift) / d.scale;
            return d.scale > 0.0 ? d.inner->cdf(z) : 1.0 - d.inner->cdf(z);
          },
      },
      family_);
}

double Distribution::quantile(double p) const {
  if (!(p >= 0.0 && p <= 1.0)) throw DomainError("quantile probability outside [0, 1]");
  const Support s = support();
  if (p == 0.0) return s.lo;
  if (p == 1.0) return s.hi;
  return std::visit(
      Overloaded{
          [&](const law::Uniform& d) { return d.lo + p * (d.hi - d.lo); },
          [&](const law::Normal& d) {
            return bm::quantile(
                bm::normal_distribution<double, NoThrow>(d.mean, std::sqrt(d.variance)), p);
          },
          [&](const law::Gamma& d) {
            return bm::quantile(bm::gamma_distribution<double, NoThrow>(d.shape, 1.0 / d.rate), p);
          },
          [&](const law::Beta& d) {
            return bm::quantile(bm::beta_distribution<double, NoThrow>(d.a, d.b), p);
          },
          [&](const law::Triangular& d) { return triangular_quantile(d, p); },
          [&](const law::TruncatedExponential& d) {
            return d.lo - std::log1p(p * std::expm1(-d.rate * (d.hi - d.lo))) / d.rate;
          },
          [&](const law::Quartic&) { return quartic_quantile(p); },
          [&](const law::ScaledShifted& d) {
            return d.scale * d.inner->quantile(d.scale > 0.0 ? p : 1.0 - p) + d.shift;
          },
      },
      family_);
}

// ---------------------------------------------------------------- moments

double Distribution::mean() const {
  return std::visit(
      Overloaded{
          [](const law::Uniform& d) { return 0.5 * (d.lo + d.hi); },
          [](const law::Normal& d) { return d.mean; },
          [](const law::Gamma& d) { return d.shape / d.rate; },
          [](const law::Beta& d) { return d.a / (d.a + d.b); },
          [](const law::Triangular& d) { return (d.lo + d.mode + d.hi) / 3.0; },
          [](const law::TruncatedExponential& d) {
            // 1/k + (lo e^{-k lo} - hi e^{-k hi}) / (e^{-k lo} - e^{-k hi})
            const double D = d.hi - d.lo;
            const double em = std::exp(-d.rate * D);
            return 1.0 / d.rate + (d.lo - d.hi * em) / (1.0 - em);
          },
          [](const law::Quartic&) { return 0.0; },
          [](const law::ScaledShifted& d) { return d.scale * d.inner->mean() + d.shift; },
      },
      family_);
}

double Distribution::variance() const {
  return std::visit(
      Overloaded{
          [](const law::Uniform& d) { return (d.hi - d.lo) * (d.hi - d.lo) / 12.0; },
          [](const law::Normal& d) { return d.variance; },
          [](const law::Gamma& d) { return d.shape / (d.rate * d.rate); },
          [](const law::Beta& d) {
            const double s = d.a + d.b;
            return d.a * d.b / (s * s * (s + 1.0));
          },
          [](const law::Triangular& d) {
            return (d.lo * d.lo + d.mode * d.mode + d.hi * d.hi - d.lo * d.mode - d.lo * d.hi -
                    d.mode * d.hi) /
                   18.0;
          },
          [](const law::TruncatedExponential& d) {
            // 1/k^2 - D^2 e^{-kD} / (1 - e^{-kD})^2
            const double D = d.hi - d.lo;
            const double em = std::exp(-d.rate * D);
            const double den = -std::expm1(-d.rate * D);
            return 1.0 / (d.rate * d.rate) - D * D * em / (den * den);
          },
          [](const law::Quartic&) { return 1.0; },
          [](const law::ScaledShifted& d) { return d.scale * d.scale * d.inner->variance(); },
      },
      family_);
}

std::optional<double> Distribution::mgf(double lambda) const {
  if (lambda == 0.0) return 1.0;
  return std::visit(
      Overloaded{
          [&](const law::Uniform& d) -> std::optional<double> {
            const double w = lambda * (d.hi - d.lo);
            return std::exp(lambda * d.lo) * std::expm1(w) / w;
          },
          [&](const law::Normal& d) -> std::optional<double> {
            return std::exp(d.mean * lambda + 0.5 * d.variance * lambda * lambda);
          },
          [&](const law::Gamma& d) -> std::optional<double> {
            if (lambda >= d.rate)
              throw DomainError("Gamma MGF requires lambda < rate");
            return std::exp(-d.shape * std::log1p(-lambda / d.rate));
          },
          [&](const law::Beta& d) -> std::optional<double> {
            return bm::hypergeometric_1F1(d.a, d.a + d.b, lambda);
          },
          [&](const law::Triangular& d) -> std::optional<double> {
            const double a = d.lo, b = d.hi, c = d.mode;
            if (std::abs(lambda) * (b - a) < 1e-4) {
              // Second-order expansion with exact raw moments.
              const double m1 = (a + b + c) / 3.0;
              const double var = (a * a + b * b + c * c - a * b - a * c - b * c) / 18.0;
              const double m2 = var + m1 * m1;
              const double m3 = (a * a * a + b * b * b + c * c * c + a * a * b + a * a * c +
                                 b * b * a + b * b * c + c * c * a + c * c * b + a * b * c) /
                                10.0;
              return 1.0 + lambda * m1 + 0.5 * lambda * lambda * m2 +
                     lambda * lambda * lambda * m3 / 6.0;
            }
            const double l2 = lambda * lambda;
            if (c == a) {
              // Decreasing ramp on [a, b].
              return 2.0 * (std::exp(lambda * b) - std::exp(lambda * a) - lambda * (b - a) *
                                                                             std::exp(lambda * a)) /
                     ((b - a) * (b - a) * l2);
            }
            if (c == b) {
              return 2.0 * (std::exp(lambda * a) - std::exp(lambda * b) + lambda * (b - a) *
                                                                             std::exp(lambda * b)) /
                     ((b - a) * (b - a) * l2);
            }
            return 2.0 *
                   ((b - c) * std::exp(a * lambda) - (b - a) * std::exp(c * lambda) +
                    (c - a) * std::exp(b * lambda)) /
                   ((b - a) * (c - a) * (b - c) * l2);
          },
          [&](const law::TruncatedExponential& d) -> std::optional<double> {
            const double D = d.hi - d.lo;
            const double m = d.rate - lambda;
            const double ratio = std::abs(m * D) < 1e-8 ? -D * (1.0 - 0.5 * m * D)
                                                        : std::expm1(-m * D) / m;
            return d.rate * std::exp(lambda * d.lo) * ratio / std::expm1(-d.rate * D);
          },
          [&](const law::Quartic&) -> std::optional<double> { return std::nullopt; },
          [&](const law::ScaledShifted& d) -> std::optional<double> {
            const auto inner = d.inner->mgf(d.scale * lambda);
            if (!inner) return std::nullopt;
            return std::exp(lambda * d.shift) * *inner;
          },
      },
      family_);
}

// ---------------------------------------------------------------- sampling

double Distribution::sample(Rng& rng) const {
  return std::visit(
      Overloaded{
          [&](const law::Uniform& d) { return d.lo + (d.hi - d.lo) * uniform01(rng); },
          [&](const law::Normal& d) {
            boost::random::normal_distribution<double> n(d.mean, std::sqrt(d.variance));
            return n(rng);
          },
          [&](const law::Gamma& d) {
            boost::random::gamma_distribution<double> g(d.shape, 1.0 / d.rate);
            return g(rng);
          },
          [&](const law::Beta& d) {
            boost::random::gamma_distribution<double> ga(d.a, 1.0);
            boost::random::gamma_distribution<double> gb(d.b, 1.0);
            const double x = ga(rng);
            const double y = gb(rng);
            return x / (x + y);
          },
          [&](const law::Triangular& d) { return triangular_quantile(d, uniform01(rng)); },
          [&](const law::TruncatedExponential& d) {
            const double u = uniform01(rng);
            return d.lo - std::log1p(u * std::expm1(-d.rate * (d.hi - d.lo))) / d.rate;
          },
          [&](const law::Quartic&) { return quartic_quantile(uniform_open(rng)); },
          [&](const law::ScaledShifted& d) { return d.scale * d.inner->sample(rng) + d.shift; },
      },
      family_);
}

// ---------------------------------------------------------------- support

Support Distribution::support() const {
  return std::visit(
      Overloaded{
          [](const law::Uniform& d) { return Support{d.lo, d.hi}; },
          [](const law::Normal&) { return Support{-kInf, kInf}; },
          [](const law::Gamma&) { return Support{0.0, kInf}; },
          [](const law::Beta&) { return Support{0.0, 1.0}; },
          [](const law::Triangular& d) { return Support{d.lo, d.hi}; },
          [](const law::TruncatedExponential& d) { return Support{d.lo, d.hi}; },
          [](const law::Quartic&) { return Support{-kInf, kInf}; },
          [](const law::ScaledShifted& d) {
            const Support s = d.inner->support();
            const double a = d.scale * s.lo + d.shift;
            const double b = d.scale * s.hi + d.shift;
            return d.scale > 0.0 ? Support{a, b} : Support{b, a};
          },
      },
      family_);
}

Support Distribution::effective_support(double mass) const {
  Support s = support();
  if (!std::isfinite(s.lo)) s.lo = quantile(mass);
  if (!std::isfinite(s.hi)) s.hi = quantile(1.0 - mass);
  return s;
}

std::vector<double> Distribution::kinks() const {
  return std::visit(Overloaded{
                        [](const law::Triangular& d) {
                          std::vector<double> k;
                          if (d.mode > d.lo && d.mode < d.hi) k.push_back(d.mode);
                          return k;
                        },
                        [](const law::ScaledShifted& d) {
                          std::vector<double> k = d.inner->kinks();
                          for (double& x : k) x = d.scale * x + d.shift;
                          if (d.scale < 0.0) std::reverse(k.begin(), k.end());
                          return k;
                        },
                        [](const auto&) { return std::vector<double>{}; },
                    },
                    family_);
}

// ---------------------------------------------------------------- regularity

double Distribution::sup_density() const {
  return std::visit(
      Overloaded{
          [](const law::Uniform& d) { return 1.0 / (d.hi - d.lo); },
          [](const law::Normal& d) { return 1.0 / std::sqrt(2.0 * kPi * d.variance); },
          [this](const law::Gamma& d) {
            if (d.shape < 1.0) return kInf;
            if (d.shape == 1.0) return d.rate;
            return pdf((d.shape - 1.0) / d.rate);
          },
          [this](const law::Beta& d) {
            if (d.a < 1.0 || d.b < 1.0) return kInf;
            if (d.a == 1.0 && d.b == 1.0) return 1.0;
            if (d.a == 1.0) return d.b;  // f(0) = b
            if (d.b == 1.0) return d.a;  // f(1) = a
            return pdf((d.a - 1.0) / (d.a + d.b - 2.0));
          },
          [](const law::Triangular& d) { return 2.0 / (d.hi - d.lo); },
          [this](const law::TruncatedExponential& d) { return pdf(d.lo); },
          [](const law::Quartic&) { return kSqrt2 / kPi; },
          [](const law::ScaledShifted& d) { return d.inner->sup_density() / std::abs(d.scale); },
      },
      family_);
}

std::optional<double> Distribution::lipschitz_constant() const {
  return std::visit(
      Overloaded{
          [](const law::Uniform&) -> std::optional<double> { return std::nullopt; },
          [](const law::Normal& d) -> std::optional<double> {
            // max |f'| attained at mean +/- sigma.
            return std::exp(-0.5) / (d.variance * std::sqrt(2.0 * kPi));
          },
          [](const law::Gamma& d) -> std::optional<double> {
            if (d.shape < 2.0) return std::nullopt;
            const double r = d.shape;
            const double s = d.rate;
            const double lg = r * std::log(s) - std::lgamma(r);
            // f'(x) = c x^{r-2} e^{-s x} ((r-1) - s x); extrema of f' at the
            // inflection points x = ((r-1) +/- sqrt(r-1)) / s.
            auto dpdf = [&](double x) {
              if (x == 0.0) return r == 2.0 ? std::exp(lg) * (r - 1.0) : 0.0;
              return std::exp(lg + (r - 2.0) * std::log(x) - s * x) * ((r - 1.0) - s * x);
            };
            const double q = std::sqrt(r - 1.0);
            return std::max(std::abs(dpdf(std::max(0.0, (r - 1.0 - q) / s))),
                            std::abs(dpdf((r - 1.0 + q) / s)));
          },
          [](const law::Beta& d) -> std::optional<double> {
            if (d.a < 2.0 || d.b < 2.0) return std::nullopt;
            const double a = d.a;
            const double b = d.b;
            const double lbeta = std::log(bm::beta(a, b));
            auto dpdf = [&](double x) {
              auto term = [&](double coef, double pa, double pb) {
                if (coef == 0.0) return 0.0;
                const double t1 = pa == 0.0 ? 1.0 : std::pow(x, pa);
                const double t2 = pb == 0.0 ? 1.0 : std::pow(1.0 - x, pb);
                return coef * t1 * t2;
              };
              return (term(a - 1.0, a - 2.0, b - 1.0) - term(b - 1.0, a - 1.0, b - 2.0)) *
                     std::exp(-lbeta);
            };
            // Inflection points of the beta density.
            const double s = a + b - 2.0;
            const double disc = (a - 1.0) * (b - 1.0) / (a + b - 3.0);
            double best = std::max(std::abs(dpdf(0.0)), std::abs(dpdf(1.0)));
            for (double sign : {-1.0, 1.0}) {
              const double x = ((a - 1.0) + sign * std::sqrt(disc)) / s;
              if (x >= 0.0 && x <= 1.0) best = std::max(best, std::abs(dpdf(x)));
            }
            return best;
          },
          [](const law::Triangular& d) -> std::optional<double> {
            if (!(d.mode > d.lo && d.mode < d.hi)) return std::nullopt;
            const double w = d.hi - d.lo;
            return std::max(2.0 / (w * (d.mode - d.lo)), 2.0 / (w * (d.hi - d.mode)));
          },
          [](const law::TruncatedExponential&) -> std::optional<double> { return std::nullopt; },
          [](const law::Quartic&) -> std::optional<double> {
            // |f'| = (4 sqrt2 / pi) x^3 / (1 + x^4)^2, maximal at x^4 = 3/5.
            const double x = std::pow(0.6, 0.25);
            return 4.0 * kSqrt2 / kPi * x * x * x / (1.6 * 1.6);
          },
          [](const law::ScaledShifted& d) -> std::optional<double> {
            const auto inner = d.inner->lipschitz_constant();
            if (!inner) return std::nullopt;
            return *inner / (d.scale * d.scale);
          },
      },
      family_);
}

bool Distribution::is_symmetric_about_zero() const {
  return std::visit(Overloaded{
                        [](const law::Uniform& d) { return d.lo == -d.hi; },
                        [](const law::Normal& d) { return d.mean == 0.0; },
                        [](const law::Triangular& d) { return d.lo == -d.hi && d.mode == 0.0; },
                        [](const law::Quartic&) { return true; },
                        [](const law::ScaledShifted& d) {
                          return d.shift == 0.0 && d.inner->is_symmetric_about_zero();
                        },
                        [](const auto&) { return false; },
                    },
                    family_);
}

}  // namespace heatdens

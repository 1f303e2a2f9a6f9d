#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "heatdens/density.hpp"
#include "heatdens/errors.hpp"
#include "heatdens/series.hpp"
#include "support.hpp"

using namespace heatdens;
using namespace testsupport;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kPi2 = kPi * kPi;
constexpr double kInf = std::numeric_limits<double>::infinity();

const KLProcess kBridge = KLProcess::brownian_bridge(Distribution::normal(0, 1));
const KLProcess kDamped = KLProcess::log_damped(Distribution::quartic());
const Distribution kU12 = Distribution::uniform(1, 2);

HeatProblem det_problem(double A, double B, const KLProcess& psi = kBridge) {
  return {0, 6, kU12, BoundaryValue::deterministic(A), BoundaryValue::deterministic(B), psi};
}

HeatProblem example3() {
  return {0,
          6,
          kU12,
          BoundaryValue::random(Distribution::triangular(-5, -3, -2)),
          BoundaryValue::random(Distribution::truncated_exponential(0.5, 3, 5)),
          kBridge};
}

double d_n(const KLProcess& psi, int n, double b2, double y, double t) {
  return std::sqrt(2.0 * psi.eigenvalue(n)) * std::exp(-n * n * kPi2 * b2 * t) * std::sin(n * kPi * y);
}

// Independent oracle for N = 1: E over beta^2 of the scaled xi density.
double oracle_n1(const Distribution& beta2, const KLProcess& psi, double y, double t, double v) {
  const Support s = beta2.support();
  return gk(
      [&](double b) {
        const double d = d_n(psi, 1, b, y, t);
        return beta2.pdf(b) * psi.coeff_law().pdf(v / d) / d;
      },
      s.lo, s.hi, 1e-12);
}

// Independent oracle for N = 2: nested 2-D integral over (beta^2, xi_2).
double oracle_n2(const Distribution& beta2, const KLProcess& psi, double y, double t, double v) {
  const Support s = beta2.support();
  const auto& xi = psi.coeff_law();
  return gk(
      [&](double b) {
        const double d1 = d_n(psi, 1, b, y, t);
        const double d2 = d_n(psi, 2, b, y, t);
        const double inner = gk([&](double z) { return xi.pdf(z) * xi.pdf((v - d2 * z) / d1) / d1; },
                                -kInf, kInf, 1e-12);
        return beta2.pdf(b) * inner;
      },
      s.lo, s.hi, 1e-11);
}

TEST(DensityVN, FirstOrderMatchesIndependentIntegral) {
  const auto cp = canonicalize(det_problem(0, 0));
  const double y = 5.0 / 6.0, t = 0.2;
  const auto grid = linspace(-1.5, 1.5, 31);
  const auto c = density_vN(cp, y, t, 1, grid);
  EXPECT_EQ(c.estimator, Estimator::Quadrature);
  for (std::size_t i = 0; i < grid.size(); ++i)
    EXPECT_NEAR(c.values[i], oracle_n1(cp.beta2, cp.psi, y, t, grid[i]), 1e-6) << grid[i];
}

TEST(DensityVN, FirstOrderQuarticMatchesIndependentIntegral) {
  const HeatProblem p(-8, 2 * kPi + 1, kU12, BoundaryValue::deterministic(0),
                      BoundaryValue::deterministic(0), kDamped);
  const auto cp = canonicalize(p);
  const double y = p.to_canonical(1.0), t = 0.1;
  const auto grid = linspace(-4, 4, 21);
  const auto c = density_vN(cp, y, t, 1, grid);
  for (std::size_t i = 0; i < grid.size(); ++i)
    EXPECT_NEAR(c.values[i], oracle_n1(cp.beta2, cp.psi, y, t, grid[i]), 1e-6) << grid[i];
}

TEST(DensityVN, PointMassCoefficientClosedForm) {
  // beta^2 nearly degenerate: the density is the scaled normal density.
  const double b0 = 0.04, t = 0.3, y = 0.4;
  const CanonicalProblem cp{Distribution::uniform(b0 - 1e-9, b0 + 1e-9), kBridge};
  const double d = d_n(kBridge, 1, b0, y, t);
  const auto grid = linspace(-1, 1, 11);
  const auto c = density_vN(cp, y, t, 1, grid);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double ref = std::exp(-0.5 * grid[i] * grid[i] / (d * d)) / (d * std::sqrt(2 * kPi));
    EXPECT_NEAR(c.values[i], ref, 1e-6 * ref + 1e-12);
  }
}

TEST(DensityVN, SecondOrderMatchesNestedIntegral) {
  for (const auto* psi : {&kBridge, &kDamped}) {
    const auto cp = canonicalize(det_problem(0, 0, *psi));
    const double y = 0.3, t = 0.2;
    const auto grid = linspace(-2, 2, 9);
    const auto c = density_vN(cp, y, t, 2, grid);
    for (std::size_t i = 0; i < grid.size(); ++i) {
      const double ref = oracle_n2(cp.beta2, cp.psi, y, t, grid[i]);
      EXPECT_NEAR(c.values[i], ref, 2e-6 * std::max(1.0, ref)) << psi->describe() << " " << grid[i];
    }
  }
}

TEST(DensityVN, TabulatedMatchesNested) {
  const auto cp = canonicalize(det_problem(0, 0, kDamped));
  const auto grid = linspace(-3, 3, 7);
  DensityOptions nested;
  nested.nested = true;
  const auto a = density_vN(cp, 0.3, 0.2, 3, grid);
  const auto b = density_vN(cp, 0.3, 0.2, 3, grid, nested);
  for (std::size_t i = 0; i < grid.size(); ++i) EXPECT_NEAR(a.values[i], b.values[i], 1e-6);
}

TEST(DensityVN, SymmetricForSymmetricCoefficients) {
  for (const auto* psi : {&kBridge, &kDamped}) {
    const auto cp = canonicalize(det_problem(0, 0, *psi));
    const auto grid = linspace(-2, 2, 41);
    for (int N : {1, 2, 3, 4}) {
      const auto c = density_vN(cp, 0.7, 0.2, N, grid);
      for (std::size_t i = 0; i < grid.size(); ++i)
        EXPECT_LT(std::abs(c.values[i] - c.values[grid.size() - 1 - i]), 1e-3);
    }
  }
}

TEST(DensityVN, Errors) {
  const auto cp = canonicalize(det_problem(0, 0));
  const auto grid = linspace(-1, 1, 5);
  EXPECT_THROW(density_vN(cp, 0.0, 0.2, 2, grid), SingularPoint);
  EXPECT_THROW(density_vN(cp, 1.0, 0.2, 2, grid), SingularPoint);
  DensityOptions q;
  q.estimator = Estimator::Quadrature;
  EXPECT_THROW(density_vN(cp, 0.5, 0.2, 7, grid, q), UnsupportedN);
  EXPECT_THROW(density_vN(cp, 0.5, 0.0, 2, grid), InvalidParameter);
  EXPECT_THROW(density_vN(cp, 0.5, 0.2, 0, grid), InvalidParameter);
  const std::vector<double> bad{0.0, 0.0, 1.0};
  EXPECT_THROW(density_vN(cp, 0.5, 0.2, 1, bad), InvalidParameter);
  const CanonicalProblem zero{cp.beta2, KLProcess::explicit_list({0.0, 0.5}, Distribution::normal(0, 1))};
  EXPECT_THROW(density_vN(zero, 0.5, 0.2, 2, grid), DegenerateCoefficient);
}

TEST(DensityVN, AutoSwitchesToMonteCarlo) {
  const auto cp = canonicalize(det_problem(0, 0));
  DensityOptions o;
  o.mc_samples = 20'000;
  const auto grid = linspace(-1, 1, 5);
  const auto c = density_vN(cp, 0.5, 0.2, 8, grid, o);
  EXPECT_EQ(c.estimator, Estimator::ExpectationMC);
  ASSERT_TRUE(c.std_err.has_value());
  EXPECT_EQ(c.samples, 20'000u);
}

TEST(DensityVN, MonteCarloIsSeedStable) {
  const auto cp = canonicalize(det_problem(0, 0, kDamped));
  DensityOptions o;
  o.estimator = Estimator::ExpectationMC;
  o.mc_samples = 50'000;
  o.seed = 42;
  const auto grid = linspace(-2, 2, 9);
  const auto a = density_vN(cp, 0.4, 0.1, 5, grid, o);
  const auto b = density_vN(cp, 0.4, 0.1, 5, grid, o);
  EXPECT_EQ(a.values, b.values);
  EXPECT_EQ(*a.std_err, *b.std_err);
}

TEST(DensityVN, QuadratureAgreesWithMonteCarlo) {
  for (const auto* psi : {&kBridge, &kDamped}) {
    const auto cp = canonicalize(det_problem(0, 0, *psi));
    const auto grid = linspace(-1.5, 1.5, 13);
    DensityOptions mc;
    mc.estimator = Estimator::ExpectationMC;
    mc.mc_samples = 1'000'000;
    mc.seed = 7;
    const auto q = density_vN(cp, 0.6, 0.2, 4, grid);
    const auto m = density_vN(cp, 0.6, 0.2, 4, grid, mc);
    for (std::size_t i = 0; i < grid.size(); ++i)
      EXPECT_LE(std::abs(q.values[i] - m.values[i]), 3.0 * (*m.std_err)[i] + 1e-6)
          << psi->describe() << " " << grid[i];
  }
}

TEST(DensityUN, DeterministicShiftInvariance) {
  const auto p = det_problem(-3, 3);
  const auto p0 = det_problem(0, 0);
  const double shift = p.boundary_line(5.0, -3, 3);
  const auto grid = linspace(1, 3, 41);
  std::vector<double> g0(grid);
  for (double& u : g0) u -= shift;
  const auto a = density_uN_det(p, 5.0, 0.2, 3, grid);
  const auto b = density_uN_det(p0, 5.0, 0.2, 3, g0);
  for (std::size_t i = 0; i < grid.size(); ++i) EXPECT_DOUBLE_EQ(a.values[i], b.values[i]);
  EXPECT_EQ(a.grid, grid);
}

TEST(DensityUN, NormalizationAndPeak) {
  const auto p = det_problem(-3, 3);
  for (int N : {1, 2, 3, 4}) {
    const auto grid = default_grid(p, 5.0, 0.2, N);
    const auto c = density_uN(p, 5.0, 0.2, N, grid);
    EXPECT_NEAR(c.mass(), 1.0, 0.002);
    const auto it = std::max_element(c.values.begin(), c.values.end());
    EXPECT_NEAR(grid[it - c.values.begin()], 2.0, 0.05);
  }
  const auto p3 = example3();
  const auto grid = default_grid(p3, 5.0, 0.2, 2);
  EXPECT_NEAR(density_uN(p3, 5.0, 0.2, 2, grid).mass(), 1.0, 0.002);
}

TEST(DensityUN, DeterministicRequiresFixedValues) {
  const auto grid = linspace(0, 1, 3);
  EXPECT_THROW(density_uN_det(example3(), 5.0, 0.2, 1, grid), InvalidParameter);
  EXPECT_THROW(density_uN_det(det_problem(0, 0), 7.0, 0.2, 1, grid), OutOfDomain);
}

// Oracle: triple integral over (a, b, beta^2) with Boost quadrature.
TEST(DensityUN, RandomBoundaryFirstOrderMatchesIndependentIntegral) {
  const auto p = example3();
  const auto cp = canonicalize(p);
  const double x = 5.0, t = 0.2, y = p.to_canonical(x);
  const double wa = p.weight_A(x), wb = p.weight_B(x);
  const auto& fa = p.bc_A().law();
  const auto& fb = p.bc_B().law();
  const std::vector<double> grid{1.5, 2.3, 2.64, 3.1, 3.8};
  const auto c = density_uN(p, x, t, 1, grid);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double u = grid[i];
    const double ref = gk_pieces(
        [&](double a) {
          return fa.pdf(a) * gk([&](double b) {
                   return fb.pdf(b) * oracle_n1(cp.beta2, cp.psi, y, t, u - wa * a - wb * b);
                 }, 3, 5, 1e-9);
        },
        {-5, -3, -2}, 1e-9);
    EXPECT_NEAR(c.values[i], ref, 1e-5 * std::max(1.0, ref)) << u;
  }
}

TEST(DensityUN, MixedBoundaryValues) {
  const HeatProblem p(0, 6, kU12, BoundaryValue::deterministic(-3),
                      BoundaryValue::random(Distribution::uniform(2.5, 3.5)), kBridge);
  const auto grid = default_grid(p, 5.0, 0.2, 2);
  const auto c = density_uN(p, 5.0, 0.2, 2, grid);
  EXPECT_NEAR(c.mass(), 1.0, 0.002);
}

TEST(DensityUN, ConvolutionTendsToShift) {
  const double eps = 1e-4;
  const HeatProblem pr(0, 6, kU12, BoundaryValue::random(Distribution::uniform(-3 - eps, -3 + eps)),
                       BoundaryValue::random(Distribution::uniform(3 - eps, 3 + eps)), kBridge);
  const auto pd = det_problem(-3, 3);
  for (int N : {1, 3}) {
    const auto grid = default_grid(pd, 5.0, 0.2, N);
    const auto a = density_uN_random(pr, 5.0, 0.2, N, grid);
    const auto b = density_uN_det(pd, 5.0, 0.2, N, grid);
    EXPECT_LT(sup_diff(a, b), 5e-3);
  }
}

TEST(DensityUN, UnboundedBoundaryLawIsTruncatedWithNote) {
  const HeatProblem p(0, 6, kU12, BoundaryValue::deterministic(-3),
                      BoundaryValue::random(Distribution::normal(3, 0.25)), kBridge);
  const auto grid = default_grid(p, 5.0, 0.2, 1);
  const auto c = density_uN(p, 5.0, 0.2, 1, grid);
  ASSERT_EQ(c.notes.size(), 1u);
  EXPECT_NE(c.notes[0].find("bc_B truncated"), std::string::npos);
  EXPECT_NEAR(c.mass(), 1.0, 0.002);
}

TEST(Variance, ClosedFormMatchesSampling) {
  const auto p = example3();
  const auto v = uN_variance(p, 5.0, 0.2, 3);
  ASSERT_TRUE(v.has_value());
  const auto s = sample_uN(p, 5.0, 0.2, 3, 400'000, 5);
  EXPECT_NEAR(var_of(s) / *v, 1.0, 0.01);
}

TEST(TailBound, PositiveAndDecreasing) {
  const auto p = det_problem(-3, 3);
  double prev = kInf;
  for (int N = 1; N <= 8; ++N) {
    const auto b = tail_bound(p, 5.0, 0.2, N);
    ASSERT_TRUE(b.has_value());
    EXPECT_GT(*b, 0.0);
    EXPECT_LT(*b, prev);
    prev = *b;
  }
}

TEST(TailBound, PointMassTermsAreExponentials) {
  const double a0 = 1.5, t = 0.2, len = 6.0, x = 5.0;
  const HeatProblem p(0, len, Distribution::uniform(a0 - 1e-10, a0 + 1e-10),
                      BoundaryValue::deterministic(0), BoundaryValue::deterministic(0), kBridge);
  const double y = x / len;
  const double lip = std::exp(-0.5) / std::sqrt(2 * kPi) / (2.0 / kPi2);
  const double pre = 2.0 * std::sqrt(1.0 / 6.0) * lip / std::pow(std::sin(kPi * y), 2);
  for (int N : {1, 2, 4}) {
    double sum = 0.0;
    for (int n = N + 1; n < 200; ++n) sum += std::exp(-(n * n - 2.0) * kPi2 * a0 * t / (len * len));
    EXPECT_NEAR(*tail_bound(p, x, t, N) / (pre * sum), 1.0, 1e-8) << N;
  }
}

TEST(TailBound, UnavailableWithoutLipschitzOrMgf) {
  const HeatProblem p(0, 6, kU12, BoundaryValue::deterministic(0), BoundaryValue::deterministic(0),
                      KLProcess::brownian_bridge(Distribution::uniform(-std::sqrt(3.0), std::sqrt(3.0))));
  EXPECT_FALSE(tail_bound(p, 3.0, 0.2, 2).has_value());
  EXPECT_THROW(tail_bound(p, 0.0, 0.2, 2), SingularPoint);
}

TEST(Grid, DefaultGridCentredOnMean) {
  const auto p = example3();
  const auto g = default_grid(p, 5.0, 0.2, 2, 101);
  ASSERT_EQ(g.size(), 101u);
  EXPECT_NEAR(0.5 * (g.front() + g.back()), boundary_mean_line(p, 5.0), 1e-12);
  EXPECT_NEAR((g.back() - g.front()) / 12.0, std::sqrt(*uN_variance(p, 5.0, 0.2, 2)), 1e-12);
}

TEST(Grid, Helpers) {
  const auto g = linspace(0, 1, 5);
  EXPECT_EQ(g, (std::vector<double>{0, 0.25, 0.5, 0.75, 1}));
  const std::vector<double> f{0, 1, 2, 3, 4};
  EXPECT_DOUBLE_EQ(trapezoid(g, f), 2.0);
}

}  // namespace

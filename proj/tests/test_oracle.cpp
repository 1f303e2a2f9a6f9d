#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include <boost/math/distributions/normal.hpp>

#include "heatdens/errors.hpp"
#include "heatdens/oracle.hpp"
#include "support.hpp"

using namespace heatdens;

namespace {

DensityCurve normal_curve(double mu, double sd, std::vector<double> grid) {
  DensityCurve c;
  c.grid = std::move(grid);
  const boost::math::normal_distribution<double> n(mu, sd);
  for (double u : c.grid) c.values.push_back(boost::math::pdf(n, u));
  return c;
}

std::vector<double> normal_samples(double mu, double sd, std::size_t n, std::uint64_t seed) {
  const auto d = Distribution::normal(mu, sd * sd);
  Rng rng(seed);
  std::vector<double> s(n);
  for (auto& x : s) x = d.sample(rng);
  return s;
}

TEST(Oracle, SelfTestAgainstNormal) {
  const auto emp = make_empirical(normal_samples(0, 1, 1'000'000, 1), 200, 1);
  const auto c = normal_curve(0, 1, linspace(-6, 6, 2001));
  EXPECT_LT(ks_distance(emp, c), 0.002);
}

// The curve-side CDF agrees with the closed-form normal CDF at grid nodes.
TEST(Oracle, TrapezoidCdfMatchesClosedForm) {
  const auto c = normal_curve(0.5, 2, linspace(-11.5, 12.5, 2001));
  const auto F = curve_cdf(c);
  const boost::math::normal_distribution<double> n(0.5, 2);
  for (std::size_t i = 0; i < F.size(); i += 50) EXPECT_NEAR(F[i], boost::math::cdf(n, c.grid[i]), 2e-5);
}

TEST(Oracle, DetectsShiftedCurve) {
  const auto emp = make_empirical(normal_samples(0, 0.25, 200'000, 2));
  const auto c = normal_curve(1.0, 0.25, linspace(-3, 3, 1201));
  EXPECT_GT(ks_distance(emp, c), 0.5);
}

TEST(Oracle, RangeMismatch) {
  const auto emp = make_empirical(normal_samples(0, 1, 100'000, 3));
  EXPECT_THROW(ks_distance(emp, normal_curve(0, 1, linspace(-1, 1, 101))), RangeMismatch);
  EXPECT_NO_THROW(ks_distance(emp, normal_curve(0, 1, linspace(-3.5, 3.5, 101))));
}

TEST(Oracle, CriticalValue) {
  EXPECT_NEAR(ks_critical_value(1'000'000, 0.001), 1.94947 / 1000.0, 1e-8);
  EXPECT_NEAR(ks_critical_value(100, 0.05), 0.1358, 1e-4);
}

TEST(Oracle, EmpiricalBinning) {
  const auto emp = make_empirical(normal_samples(0, 1, 100'000, 4), 50, 4);
  EXPECT_EQ(emp.counts.size(), 50u);
  EXPECT_EQ(emp.bin_edges.size(), 51u);
  EXPECT_TRUE(std::is_sorted(emp.sorted_samples.begin(), emp.sorted_samples.end()));
  std::size_t total = 0;
  for (auto k : emp.counts) total += k;
  EXPECT_NEAR(static_cast<double>(total) / 1e5, 0.998, 1e-4);
  EXPECT_EQ(emp.seed, 4u);
  EXPECT_NEAR(emp.quantile(0.5), 0.0, 0.02);
}

// 200 bins: the max of 200 |z| scores exceeds 3 with probability about 0.4
// even for the true law, so the gate is the Bonferroni 0.1% level.
TEST(Oracle, HistogramAgreesWithTrueLaw) {
  const auto emp = make_empirical(normal_samples(0, 1, 1'000'000, 5), 200, 5);
  const auto h = histogram_deviation(emp, normal_curve(0, 1, linspace(-6, 6, 4001)));
  EXPECT_EQ(h.bins_used, 200u);
  EXPECT_LT(h.max_z, 4.06);
}

TEST(Oracle, HistogramFlagsWrongLaw) {
  const auto emp = make_empirical(normal_samples(0, 1, 1'000'000, 6), 200, 6);
  const auto h = histogram_deviation(emp, normal_curve(0, 1.05, linspace(-7, 7, 4001)));
  EXPECT_GT(h.max_z, 6.0);
}

TEST(Oracle, CoveringGridSpansBoth) {
  const auto emp = make_empirical(normal_samples(0, 1, 100'000, 7));
  const auto base = linspace(-1, 5, 11);
  const auto g = covering_grid(base, emp, 101);
  EXPECT_EQ(g.size(), 101u);
  EXPECT_LE(g.front(), emp.quantile(1e-4));
  EXPECT_EQ(g.back(), 5.0);
}

TEST(Oracle, SeededEmpiricalIsDeterministic) {
  const HeatProblem p(0, 6, Distribution::uniform(1, 2), BoundaryValue::deterministic(-3),
                      BoundaryValue::deterministic(3),
                      KLProcess::brownian_bridge(Distribution::normal(0, 1)));
  const auto a = build_empirical(p, 5.0, 0.2, 2, 20'000, 11);
  const auto b = build_empirical(p, 5.0, 0.2, 2, 20'000, 11);
  EXPECT_EQ(a.sorted_samples, b.sorted_samples);
  EXPECT_EQ(a.counts, b.counts);
}

// Narrow beta^2 and one coefficient: |u - line| <= |A_1| exp(-pi^2 beta^2 t) sin(pi y).
TEST(Oracle, DegenerateInputsStayInPredictedInterval) {
  const auto xi = Distribution::uniform(-std::sqrt(3.0), std::sqrt(3.0));
  const HeatProblem p(0, 1, Distribution::uniform(1 - 1e-9, 1 + 1e-9), BoundaryValue::deterministic(1),
                      BoundaryValue::deterministic(1), KLProcess::explicit_list({0.5}, xi));
  const double half = std::sqrt(3.0) * std::exp(-std::numbers::pi * std::numbers::pi * 0.1) *
                      std::sin(std::numbers::pi * 0.25);
  const auto e = build_empirical(p, 0.25, 0.1, 1, 10'000, 1);
  EXPECT_GE(e.sorted_samples.front(), 1 - half * (1 + 1e-8));
  EXPECT_LE(e.sorted_samples.back(), 1 + half * (1 + 1e-8));
}

TEST(Oracle, Example1FourthOrderKs) {
  const HeatProblem p(0, 6, Distribution::uniform(1, 2), BoundaryValue::deterministic(-3),
                      BoundaryValue::deterministic(3),
                      KLProcess::brownian_bridge(Distribution::normal(0, 1)));
  const auto emp = build_empirical(p, 5.0, 0.2, 4, 1'000'000, 20240601);
  const auto grid = covering_grid(default_grid(p, 5.0, 0.2, 4), emp, 401);
  EXPECT_LT(ks_distance(emp, density_uN(p, 5.0, 0.2, 4, grid)), 0.005);
}

}  // namespace

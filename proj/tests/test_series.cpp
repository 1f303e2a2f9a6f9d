#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "heatdens/errors.hpp"
#include "heatdens/series.hpp"
#include "support.hpp"

using namespace heatdens;
using namespace testsupport;

namespace {

const KLProcess kBridge = KLProcess::brownian_bridge(Distribution::normal(0, 1));

HeatProblem example1() {
  return {0, 6, Distribution::uniform(1, 2), BoundaryValue::deterministic(-3),
          BoundaryValue::deterministic(3), kBridge};
}

TEST(Series, SingleModeAtMidpoint) {
  SeriesSample s{0.37, {1.0}, 0, 0};
  EXPECT_DOUBLE_EQ(eval_vN(s, 0.5, 0.0), 1.0);
}

TEST(Series, TwoModesAgainstHighPrecision) {
  using big = boost::multiprecision::cpp_bin_float_50;
  const big pi = boost::math::constants::pi<big>();
  const big ref = big(0.5) * exp(-big(0.1) * pi * pi) * sin(pi / 3) -
                  big(0.2) * exp(-big(0.4) * pi * pi) * sin(2 * pi / 3);
  SeriesSample s{1.0, {0.5, -0.2}, 0, 0};
  EXPECT_NEAR(eval_vN(s, 1.0 / 3.0, 0.1), ref.convert_to<double>(), 1e-15);
  EXPECT_NEAR(eval_vN(s, 1.0 / 3.0, 0.1), 0.158045, 1e-6);
}

TEST(Series, HomogeneousAtEnds) {
  SeriesSample s{0.2, {0.3, -1.2, 4.0, 0.7}, 0, 0};
  EXPECT_EQ(eval_vN(s, 0.0, 0.3), 0.0);
  EXPECT_EQ(eval_vN(s, 1.0, 0.3), 0.0);
}

TEST(Series, BoundaryValuesAtEnds) {
  const auto p = example1();
  SeriesSample s{0.05, {0.3, -1.2}, -2.75, 3.125};
  EXPECT_EQ(eval_uN(p, s, 0.0, 0.2), -2.75);
  EXPECT_EQ(eval_uN(p, s, 6.0, 0.2), 3.125);
  EXPECT_THROW(eval_uN(p, s, 6.1, 0.2), OutOfDomain);
}

TEST(Series, PureLinearPart) {
  SeriesSample s{0.05, {0.0, 0.0, 0.0}, -3, 3};
  EXPECT_DOUBLE_EQ(eval_uN(example1(), s, 5.0, 0.7), 2.0);
}

TEST(Series, LinearInCoefficients) {
  SeriesSample a{0.04, {0.3, -1.2, 0.5}, 0, 0};
  SeriesSample b{0.04, {-0.7, 0.1, 2.0}, 0, 0};
  SeriesSample c{0.04, {0, 0, 0}, 0, 0};
  for (int i = 0; i < 3; ++i) c.coeffs[i] = 2.0 * a.coeffs[i] - 3.0 * b.coeffs[i];
  EXPECT_NEAR(eval_vN(c, 0.3, 0.2), 2.0 * eval_vN(a, 0.3, 0.2) - 3.0 * eval_vN(b, 0.3, 0.2), 1e-14);
}

TEST(Series, ModesDecayInTime) {
  SeriesSample s{1.0, {0.0, 1.0}, 0, 0};
  const double v0 = eval_vN(s, 0.25, 0.0);
  const double v1 = eval_vN(s, 0.25, 0.05);
  EXPECT_NEAR(v1 / v0, std::exp(-4 * std::numbers::pi * std::numbers::pi * 0.05), 1e-14);
}

TEST(Series, DrawOrderAndDeterminism) {
  const auto p = example1();
  Rng r1(3), r2(3);
  const auto s = draw_sample(p, 4, r1);
  const double alpha2 = p.alpha2().sample(r2);
  EXPECT_DOUBLE_EQ(s.beta2, alpha2 / 36.0);
  EXPECT_EQ(s.coeffs, p.psi().sample_coeffs(4, r2));
  EXPECT_EQ(s.a, -3.0);
  EXPECT_EQ(s.b, 3.0);

  const auto u1 = sample_uN(p, 5.0, 0.2, 3, 50'000, 9);
  const auto u2 = sample_uN(p, 5.0, 0.2, 3, 50'000, 9);
  EXPECT_EQ(u1, u2);
  const auto ss = draw_solution_samples(p, 3, 50'000, 9);
  for (std::size_t i = 0; i < ss.size(); i += 997) EXPECT_EQ(eval_uN(p, ss[i], 5.0, 0.2), u1[i]);
}

TEST(Series, SingleCoefficientMatchesDirectSampling) {
  const auto p = example1();
  const auto ss = draw_solution_samples(p, 1, 1000, 4);
  Rng rng = make_rng(4, 0);
  for (std::size_t i = 0; i < ss.size(); ++i) {
    const double b2 = p.alpha2().sample(rng) / 36.0;
    const double a1 = p.psi().coeff_scale(1) * p.psi().coeff_law().sample(rng);
    ASSERT_EQ(ss[i].beta2, b2);
    ASSERT_EQ(ss[i].coeffs.size(), 1u);
    ASSERT_EQ(ss[i].coeffs[0], a1);
  }
}

TEST(Series, Example1MeanIsBoundaryLine) {
  const auto u = sample_uN(example1(), 5.0, 0.2, 4, 1'000'000, 20240601);
  const double se = std::sqrt(var_of(u) / u.size());
  EXPECT_LT(std::abs(mean_of(u) - 2.0), 3.0 * se);
}

// For symmetric coefficient laws v_N and -v_N share one law: two-sample KS.
TEST(Series, SymmetricLawUnderSignFlip) {
  const HeatProblem p(0, 1, Distribution::uniform(1, 2), BoundaryValue::deterministic(0),
                      BoundaryValue::deterministic(0), KLProcess::log_damped(Distribution::quartic()));
  auto v = sample_uN(p, 0.3, 0.01, 4, 200'000, 2);
  std::vector<double> w(v.size());
  std::transform(v.begin(), v.end(), w.begin(), [](double x) { return -x; });
  std::sort(v.begin(), v.end());
  std::sort(w.begin(), w.end());
  double d = 0.0;
  std::size_t i = 0, j = 0;
  const double n = static_cast<double>(v.size());
  while (i < v.size() && j < w.size()) {
    if (v[i] <= w[j]) ++i; else ++j;
    d = std::max(d, std::abs(i / n - j / n));
  }
  EXPECT_LT(d, 1.9495 * std::sqrt(2.0 / n));
}

}  // namespace

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "heatdens/quadrature.hpp"

using namespace heatdens;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

TEST(Quadrature, PolynomialIsExact) {
  const auto r = quad::integrate([](double x) { return x * x; }, 0.0, 1.0);
  EXPECT_NEAR(r.value, 1.0 / 3.0, 1e-15);
  EXPECT_TRUE(r.converged);
}

TEST(Quadrature, GaussianOverWholeLine) {
  const auto r = quad::integrate([](double x) { return std::exp(-x * x); }, -kInf, kInf);
  EXPECT_NEAR(r.value, std::sqrt(std::numbers::pi), 1e-10);
}

TEST(Quadrature, HalfLines) {
  EXPECT_NEAR(quad::integrate([](double x) { return std::exp(-x); }, 0.0, kInf).value, 1.0, 1e-10);
  EXPECT_NEAR(quad::integrate([](double x) { return std::exp(x); }, -kInf, 0.0).value, 1.0, 1e-10);
}

TEST(Quadrature, BreakpointsHandleKinks) {
  const double pts[3] = {-1.0, 0.3, 2.0};
  const auto r = quad::integrate([](double x) { return std::abs(x - 0.3); },
                                 std::span<const double>(pts, 3));
  EXPECT_NEAR(r.value, 0.5 * 1.3 * 1.3 + 0.5 * 1.7 * 1.7, 1e-14);
}

TEST(Quadrature, IntegrableEndpointSingularity) {
  const auto r = quad::integrate([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0,
                                 {1e-10, 1e-10, 500});
  EXPECT_NEAR(r.value, 2.0, 1e-8);
}

TEST(Quadrature, VectorMatchesScalar) {
  const double pts[2] = {0.0, 3.0};
  const auto v = quad::integrate_vector(
      [](double x, std::span<double> out) {
        out[0] = std::sin(x);
        out[1] = std::exp(-x) * x;
        out[2] = 1.0;
      },
      3, std::span<const double>(pts, 2));
  EXPECT_NEAR(v.value[0], 1.0 - std::cos(3.0), 1e-12);
  EXPECT_NEAR(v.value[1], 1.0 - 4.0 * std::exp(-3.0), 1e-12);
  EXPECT_NEAR(v.value[2], 3.0, 1e-14);
}

TEST(Quadrature, ReportsNonConvergence) {
  const auto r = quad::integrate([](double x) { return std::sin(1e4 * x); }, 0.0, 1.0,
                                 {1e-14, 1e-14, 3});
  EXPECT_FALSE(r.converged);
}

}  // namespace

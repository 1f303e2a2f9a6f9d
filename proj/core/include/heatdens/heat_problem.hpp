#pragma once

#include <optional>
#include <string>

#include "heatdens/distribution.hpp"
#include "heatdens/kl_process.hpp"
#include "heatdens/rng.hpp"

namespace heatdens {

/// A boundary value: either a fixed number or a random variable.
class BoundaryValue {
 public:
  static BoundaryValue deterministic(double value);
  static BoundaryValue random(const Distribution& law);

  bool is_random() const { return law_.has_value(); }
  /// The fixed value. Only meaningful when !is_random().
  double value() const { return value_; }
  const Distribution& law() const;

  double mean() const;
  double variance() const;
  double sample(Rng& rng) const;
  std::string describe() const;

 private:
  BoundaryValue(double v, std::optional<Distribution> law) : value_(v), law_(std::move(law)) {}
  double value_ = 0.0;
  std::optional<Distribution> law_;
};

/// u_t = alpha^2 u_xx on [L1, L2] with u(L1) = A, u(L2) = B and initial
/// condition given through its canonical KL image psi on [0, 1].
/// alpha^2, the xi_j, A and B are assumed independent.
class HeatProblem {
 public:
  HeatProblem(double L1, double L2, const Distribution& alpha2, const BoundaryValue& bc_A,
              const BoundaryValue& bc_B, const KLProcess& psi);

  double L1() const { return L1_; }
  double L2() const { return L2_; }
  double length() const { return L2_ - L1_; }
  const Distribution& alpha2() const { return alpha2_; }
  const BoundaryValue& bc_A() const { return bc_A_; }
  const BoundaryValue& bc_B() const { return bc_B_; }
  const KLProcess& psi() const { return psi_; }

  bool deterministic_bcs() const { return !bc_A_.is_random() && !bc_B_.is_random(); }

  /// y = (x - L1) / (L2 - L1).
  double to_canonical(double x) const { return (x - L1_) / length(); }
  double from_canonical(double y) const { return L1_ + y * length(); }
  /// Weight of A in the boundary line at x: (L2 - x) / (L2 - L1).
  double weight_A(double x) const { return (L2_ - x) / length(); }
  /// Weight of B in the boundary line at x: (x - L1) / (L2 - L1).
  double weight_B(double x) const { return (x - L1_) / length(); }

  /// ((x - L1) b + (L2 - x) a) / (L2 - L1), evaluated so x = L1, L2 give a, b exactly.
  double boundary_line(double x, double a, double b) const;

 private:
  double L1_;
  double L2_;
  Distribution alpha2_;
  BoundaryValue bc_A_;
  BoundaryValue bc_B_;
  KLProcess psi_;
};

/// Homogeneous problem on [0, 1] with beta^2 = alpha^2 / (L2 - L1)^2.
struct CanonicalProblem {
  Distribution beta2;
  KLProcess psi;
};

CanonicalProblem canonicalize(const HeatProblem& p);

/// E[u(x, t)] for every t: the boundary line at the boundary means.
double boundary_mean_line(const HeatProblem& p, double x);

}  // namespace heatdens

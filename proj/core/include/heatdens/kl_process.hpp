#pragma once

// Karhunen-Loeve process on [0,1] in the sine basis:
//   psi(y) = sum_j sqrt(nu_j) * sqrt(2) sin(j pi y) * xi_j.

#include <cmath>
#include <span>
#include <string>
#include <vector>

#include "heatdens/distribution.hpp"
#include "heatdens/rng.hpp"

namespace heatdens {

enum class EigenRule { BrownianBridge, LogDamped, Explicit };

class KLProcess {
 public:
  /// nu_j = 1 / (pi^2 j^2).
  static KLProcess brownian_bridge(const Distribution& xi, int default_terms = 200);
  /// nu_j = 1 / (j^3 (1 + log j)).
  static KLProcess log_damped(const Distribution& xi, int default_terms = 200);
  /// Finitely many eigenvalues; nu_j = 0 beyond the list.
  static KLProcess explicit_list(std::vector<double> nu, const Distribution& xi);

  EigenRule rule() const { return rule_; }
  std::string describe() const;
  const Distribution& coeff_law() const { return xi_; }
  int default_terms() const { return default_terms_; }

  /// nu_j for j >= 1.
  double eigenvalue(int j) const;
  /// sqrt(2 nu_n): the scale mapping xi_n to the Fourier coefficient A_n.
  double coeff_scale(int n) const;
  /// Law of A_n. Throws DegenerateCoefficient when nu_n = 0.
  Distribution fourier_coeff_law(int n) const;

  /// A_1..A_N from one draw of xi_1..xi_N.
  std::vector<double> sample_coeffs(int N, Rng& rng) const;
  /// psi_J on the grid, sharing one draw of xi_1..xi_J.
  std::vector<double> sample_path(std::span<const double> y_grid, int J, Rng& rng) const;

  /// sum_j nu_j including a certified tail.
  double eigenvalue_sum() const;
  /// ||psi||_{L2([0,1] x Omega)} = sqrt(sum_j nu_j).
  double l2_norm() const { return std::sqrt(eigenvalue_sum()); }

 private:
  KLProcess(EigenRule rule, std::vector<double> nu, const Distribution& xi, int default_terms);

  EigenRule rule_;
  std::vector<double> nu_;
  Distribution xi_;
  int default_terms_;
};

}  // namespace heatdens

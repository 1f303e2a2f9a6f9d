#include "heatdens/heat_problem.hpp"

#include <cmath>
#include <sstream>

#include "heatdens/errors.hpp"

namespace heatdens {

BoundaryValue BoundaryValue::deterministic(double value) {
  if (!std::isfinite(value)) throw InvalidParameter("boundary value must be finite");
  return BoundaryValue(value, std::nullopt);
}

BoundaryValue BoundaryValue::random(const Distribution& law) { return BoundaryValue(0.0, law); }

const Distribution& BoundaryValue::law() const {
  if (!law_) throw InvalidParameter("deterministic boundary value has no law");
  return *law_;
}

double BoundaryValue::mean() const { return law_ ? law_->mean() : value_; }
double BoundaryValue::variance() const { return law_ ? law_->variance() : 0.0; }
double BoundaryValue::sample(Rng& rng) const { return law_ ? law_->sample(rng) : value_; }

std::string BoundaryValue::describe() const {
  if (law_) return law_->describe();
  std::ostringstream os;
  os.precision(10);
  os << value_;
  return os.str();
}

HeatProblem::HeatProblem(double L1, double L2, const Distribution& alpha2,
                         const BoundaryValue& bc_A, const BoundaryValue& bc_B,
                         const KLProcess& psi)
    : L1_(L1), L2_(L2), alpha2_(alpha2), bc_A_(bc_A), bc_B_(bc_B), psi_(psi) {
  if (!(std::isfinite(L1) && std::isfinite(L2) && L1 < L2))
    throw InvalidInterval("require finite L1 < L2");
  if (alpha2_.support().lo < 0.0)
    throw InvalidParameter("diffusion coefficient law must be supported in (0, inf)");
}

double HeatProblem::boundary_line(double x, double a, double b) const {
  const double w = to_canonical(x);
  return (1.0 - w) * a + w * b;
}

CanonicalProblem canonicalize(const HeatProblem& p) {
  const double len2 = p.length() * p.length();
  return {Distribution::scaled_shifted(p.alpha2(), 1.0 / len2, 0.0), p.psi()};
}

double boundary_mean_line(const HeatProblem& p, double x) {
  if (!(x >= p.L1() && x <= p.L2())) throw OutOfDomain("x outside [L1, L2]");
  return p.boundary_line(x, p.bc_A().mean(), p.bc_B().mean());
}

}  // namespace heatdens

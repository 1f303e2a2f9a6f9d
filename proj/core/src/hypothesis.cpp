#include "heatdens/hypothesis.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <variant>

namespace heatdens {

namespace {

constexpr double kPi2 = std::numbers::pi * std::numbers::pi;

Tri hip_a_rule(const Distribution& d) {
  // Bounded below by a > 0: terms decay like exp(-c n^2).
  if (d.support().lo > 0.0) return Tri::Yes;
  if (const auto* g = std::get_if<law::Gamma>(&d.family()))
    return g->shape > 0.5 ? Tri::Yes : Tri::No;
  if (const auto* s = std::get_if<law::ScaledShifted>(&d.family()))
    if (s->shift == 0.0 && s->scale > 0.0) return hip_a_rule(*s->inner);
  // A density bounded near 0 gives terms of order 1/n^2, as for Uniform(0, b).
  if (d.support().lo == 0.0 && std::isfinite(d.sup_density())) return Tri::Yes;
  return Tri::Unknown;
}

}  // namespace

const char* to_string(Theorem th) {
  switch (th) {
    case Theorem::Super: return "Super";
    case Theorem::SuperLlei: return "SuperLlei";
    case Theorem::SuperDet: return "SuperDet";
    case Theorem::SuperDetLlei: return "SuperDetLlei";
  }
  return "";
}

Tri check_hip_a(const Distribution& alpha2, double t, double len) {
  if (!(t > 0.0) || !(len > 0.0)) throw InvalidParameter("require t > 0 and len > 0");
  return hip_a_rule(alpha2);
}

Tri check_hip_a2(const Distribution& alpha2, double t, double len) {
  if (!(t > 0.0) || !(len > 0.0)) throw InvalidParameter("require t > 0 and len > 0");
  if (alpha2.support().bounded()) return Tri::Yes;
  try {
    const auto m = alpha2.mgf(kPi2 * t / (len * len));
    if (!m) return Tri::Unknown;
    return std::isfinite(*m) ? Tri::Yes : Tri::No;
  } catch (const DomainError&) {
    return Tri::No;
  }
}

std::vector<Theorem> applicable_theorems(const HypothesisFacts& f) {
  std::vector<Theorem> out;
  if (!f.nu1_positive || f.boundaries == BoundaryKind::Mixed) return out;
  const bool random = f.boundaries == BoundaryKind::Random;
  if (f.hip_a == Tri::Yes && f.lipschitz == Tri::Yes)
    out.push_back(random ? Theorem::Super : Theorem::SuperDet);
  if (f.hip_a2 == Tri::Yes && f.bounded_ae_cont == Tri::Yes)
    out.push_back(random ? Theorem::SuperLlei : Theorem::SuperDetLlei);
  return out;
}

bool TheoremReport::applies(Theorem th) const {
  for (Theorem a : applicable)
    if (a == th) return true;
  return false;
}

TheoremReport classify(const HeatProblem& p, double t) {
  TheoremReport r;
  r.hip_a_holds = check_hip_a(p.alpha2(), t, p.length());
  r.hip_a2_holds = check_hip_a2(p.alpha2(), t, p.length());

  HypothesisFacts f;
  f.hip_a = r.hip_a_holds;
  f.hip_a2 = r.hip_a2_holds;
  const double nu1 = p.psi().eigenvalue(1);
  f.nu1_positive = nu1 > 0.0;
  const Distribution& xi = p.psi().coeff_law();
  if (f.nu1_positive) {
    // f_A1(a) = f_xi(a / c) / c with c = sqrt(2 nu_1): Lipschitz constants
    // scale by 1/c^2 and sup norms by 1/c.
    if (const auto L = xi.lipschitz_constant()) {
      r.f_A1_lipschitz = Tri::Yes;
      r.lipschitz_constant = *L / (2.0 * nu1);
    } else {
      r.f_A1_lipschitz = Tri::No;
      r.notes.push_back("f_A1 is not Lipschitz; regularization at discontinuities is not attempted");
    }
    r.f_A1_bounded_ae_cont = std::isfinite(xi.sup_density()) ? Tri::Yes : Tri::No;
  } else {
    r.notes.push_back("nu_1 = 0: A_1 is not absolutely continuous, no theorem applies");
  }
  f.lipschitz = r.f_A1_lipschitz;
  f.bounded_ae_cont = r.f_A1_bounded_ae_cont;

  const bool ra = p.bc_A().is_random();
  const bool rb = p.bc_B().is_random();
  f.boundaries = ra && rb   ? BoundaryKind::Random
                 : ra || rb ? BoundaryKind::Mixed
                            : BoundaryKind::Deterministic;
  if (f.boundaries == BoundaryKind::Mixed)
    r.notes.push_back(
        "one random and one deterministic boundary value: no catalogued theorem covers this case");
  r.applicable = applicable_theorems(f);
  return r;
}

std::string TheoremReport::render() const {
  std::ostringstream os;
  os.precision(10);
  os << "hypothesis (hip_a)        : " << to_string(hip_a_holds) << "\n";
  os << "hypothesis (hip_a2)       : " << to_string(hip_a2_holds) << "\n";
  os << "f_A1 Lipschitz            : " << to_string(f_A1_lipschitz);
  if (lipschitz_constant) os << " (L = " << *lipschitz_constant << ")";
  os << "\n";
  os << "f_A1 bounded, a.e. cont.  : " << to_string(f_A1_bounded_ae_cont) << "\n";
  os << "applicable theorems       : ";
  if (applicable.empty()) os << "none";
  for (std::size_t i = 0; i < applicable.size(); ++i)
    os << (i ? ", " : "") << to_string(applicable[i]);
  os << "\n";
  for (const auto& n : notes) os << "note: " << n << "\n";
  os << "\n";
  os << "hip_a=" << to_string(hip_a_holds) << "\n";
  os << "hip_a2=" << to_string(hip_a2_holds) << "\n";
  os << "lipschitz=" << to_string(f_A1_lipschitz) << "\n";
  if (lipschitz_constant) os << "lipschitz_constant=" << *lipschitz_constant << "\n";
  os << "bounded_ae_cont=" << to_string(f_A1_bounded_ae_cont) << "\n";
  os << "applicable=";
  if (applicable.empty()) os << "none";
  for (std::size_t i = 0; i < applicable.size(); ++i)
    os << (i ? ";" : "") << to_string(applicable[i]);
  os << "\n";
  return os.str();
}

}  // namespace heatdens

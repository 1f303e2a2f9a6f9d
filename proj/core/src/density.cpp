#include "heatdens/density.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include <boost/math/interpolators/cardinal_cubic_b_spline.hpp>
#include <boost/math/special_functions/sin_pi.hpp>

#include "conditional_density.hpp"
#include "heatdens/errors.hpp"
#include "heatdens/parallel.hpp"
#include "heatdens/quadrature.hpp"
#include "heatdens/series.hpp"

namespace heatdens {

namespace {

constexpr double kPi2 = std::numbers::pi * std::numbers::pi;
// Terms with |d_n| below this fraction of |d_1| leave the convolution
// unchanged at double precision.
constexpr double kNegligibleTerm = 1e-12;

void check_grid(std::span<const double> g) {
  if (g.empty()) throw InvalidParameter("evaluation grid is empty");
  for (std::size_t i = 1; i < g.size(); ++i)
    if (!(g[i] > g[i - 1])) throw InvalidParameter("evaluation grid must be strictly increasing");
}

void check_y(double y) {
  if (!(y >= 1e-3 && y <= 1.0 - 1e-3)) {
    std::ostringstream os;
    os << "canonical point y = " << y << " too close to a boundary, sin(pi y) degenerates";
    throw SingularPoint(os.str());
  }
}

Estimator resolve(const DensityOptions& opt, int N) {
  if (opt.estimator == Estimator::Auto)
    return N <= opt.quadrature_max_N ? Estimator::Quadrature : Estimator::ExpectationMC;
  if (opt.estimator == Estimator::Quadrature && N > opt.quadrature_max_N) {
    std::ostringstream os;
    os << "quadrature estimator supports N <= " << opt.quadrature_max_N << ", got " << N;
    throw UnsupportedN(os.str());
  }
  return opt.estimator;
}

// Integration breakpoints of a law: support ends and interior kinks.
std::vector<double> breakpoints(const Distribution& d, double lo, double hi) {
  std::vector<double> pts{lo};
  for (double k : d.kinks())
    if (k > lo && k < hi) pts.push_back(k);
  pts.push_back(hi);
  return pts;
}

std::vector<double> quadrature_vN(const CanonicalProblem& cp, double y, double t, int N,
                                  std::span<const double> v, const DensityOptions& opt) {
  std::vector<double> scale(N), sines(N);
  for (int n = 1; n <= N; ++n) {
    scale[n - 1] = cp.psi.coeff_scale(n);
    sines[n - 1] = boost::math::sin_pi(n * y);
  }
  const detail::StageOptions so{opt.rel_tol, opt.table_points, opt.nested};
  const Distribution& xi = cp.psi.coeff_law();

  auto integrand = [&](double b2, std::span<double> out) {
    std::fill(out.begin(), out.end(), 0.0);
    const double fb = cp.beta2.pdf(b2);
    if (!(fb > 0.0) || !std::isfinite(fb)) return;
    std::vector<double> d(N);
    for (int n = 1; n <= N; ++n)
      d[n - 1] = scale[n - 1] * std::exp(-n * n * kPi2 * b2 * t) * sines[n - 1];
    const double d1 = std::abs(d[0]);
    if (!(d1 > 1e-300)) return;
    for (double& dn : d)
      if (std::abs(dn) <= kNegligibleTerm * d1) dn = 0.0;
    const detail::ConditionalDensity h(xi, d, so);
    parallel_for_index(v.size(), [&](std::size_t i) { out[i] = h(v[i]) * fb; });
  };

  const Support s = cp.beta2.support();
  const auto pts = breakpoints(cp.beta2, s.lo, s.hi);
  const quad::Options qo{1e-13, opt.rel_tol, 2000};
  return quad::integrate_vector(integrand, v.size(), std::span<const double>(pts), qo).value;
}

// f(v) = E[f_xi((v - S) / d_1) / |d_1|] over draws of (beta^2, xi_2..xi_N).
void mc_vN(const CanonicalProblem& cp, double y, double t, int N, std::span<const double> v,
           const DensityOptions& opt, std::vector<double>& mean, std::vector<double>& se) {
  const std::size_t n = std::max<std::size_t>(opt.mc_samples, 2);
  const std::size_t chunks = std::max<std::size_t>(opt.mc_chunks, 1);
  const std::size_t per = (n + chunks - 1) / chunks;
  const std::size_t m = v.size();
  const Distribution& xi = cp.psi.coeff_law();
  std::vector<double> scale(N), sines(N);
  for (int k = 1; k <= N; ++k) {
    scale[k - 1] = cp.psi.coeff_scale(k);
    sines[k - 1] = boost::math::sin_pi(k * y);
  }
  std::vector<double> sum(chunks * m, 0.0), sq(chunks * m, 0.0);
  parallel_for_chunks(make_chunks(n, per), [&](const Chunk& c) {
    Rng rng = make_rng(opt.seed, c.index);
    const std::size_t cnt = c.end - c.begin;
    std::vector<double> d1(cnt), shift(cnt);
    for (std::size_t i = 0; i < cnt; ++i) {
      const double b2 = cp.beta2.sample(rng);
      double s = 0.0;
      for (int k = 2; k <= N; ++k)
        s += scale[k - 1] * std::exp(-k * k * kPi2 * b2 * t) * sines[k - 1] * xi.sample(rng);
      d1[i] = std::abs(scale[0] * std::exp(-kPi2 * b2 * t) * sines[0]);
      shift[i] = s;
    }
    double* cs = &sum[c.index * m];
    double* cq = &sq[c.index * m];
    for (std::size_t j = 0; j < m; ++j) {
      double a = 0.0, b = 0.0;
      for (std::size_t i = 0; i < cnt; ++i) {
        const double f = xi.pdf((v[j] - shift[i]) / d1[i]) / d1[i];
        a += f;
        b += f * f;
      }
      cs[j] = a;
      cq[j] = b;
    }
  });
  mean.assign(m, 0.0);
  se.assign(m, 0.0);
  std::vector<double> sq_tot(m, 0.0);
  for (std::size_t c = 0; c < chunks; ++c)
    for (std::size_t j = 0; j < m; ++j) {
      mean[j] += sum[c * m + j];
      sq_tot[j] += sq[c * m + j];
    }
  const double nn = static_cast<double>(n);
  for (std::size_t j = 0; j < m; ++j) {
    mean[j] /= nn;
    const double var = std::max(0.0, (sq_tot[j] / nn - mean[j] * mean[j]) * nn / (nn - 1.0));
    se[j] = std::sqrt(var / nn);
  }
}

}  // namespace

const char* to_string(Estimator e) {
  switch (e) {
    case Estimator::Auto: return "auto";
    case Estimator::Quadrature: return "quadrature";
    case Estimator::ExpectationMC: return "expectation_mc";
  }
  return "auto";
}

double DensityCurve::mass() const { return trapezoid(grid, values); }

std::vector<double> linspace(double a, double b, std::size_t n) {
  std::vector<double> g(n);
  if (n == 1) {
    g[0] = a;
    return g;
  }
  const double h = (b - a) / static_cast<double>(n - 1);
  for (std::size_t i = 0; i < n; ++i) g[i] = a + h * static_cast<double>(i);
  g[n - 1] = b;
  return g;
}

double trapezoid(std::span<const double> x, std::span<const double> f) {
  double s = 0.0;
  for (std::size_t i = 1; i < x.size(); ++i) s += 0.5 * (x[i] - x[i - 1]) * (f[i] + f[i - 1]);
  return s;
}

double sup_diff(const DensityCurve& a, const DensityCurve& b) {
  if (a.grid != b.grid) throw InvalidParameter("sup_diff requires curves on the same grid");
  double m = 0.0;
  for (std::size_t i = 0; i < a.values.size(); ++i)
    m = std::max(m, std::abs(a.values[i] - b.values[i]));
  return m;
}

DensityCurve density_vN(const CanonicalProblem& cp, double y, double t, int N,
                        std::span<const double> v_grid, const DensityOptions& opt) {
  if (N < 1) throw InvalidParameter("truncation order must be >= 1");
  if (!(t > 0.0)) throw InvalidParameter("density requires t > 0");
  check_y(y);
  check_grid(v_grid);
  if (cp.psi.eigenvalue(1) == 0.0)
    throw DegenerateCoefficient("nu_1 = 0: A_1 is not absolutely continuous");

  DensityCurve c;
  c.x = y;
  c.t = t;
  c.N = N;
  c.grid.assign(v_grid.begin(), v_grid.end());
  c.estimator = resolve(opt, N);
  if (c.estimator == Estimator::Quadrature) {
    c.values = quadrature_vN(cp, y, t, N, v_grid, opt);
    for (double& f : c.values) f = std::max(0.0, f);
  } else {
    std::vector<double> se;
    mc_vN(cp, y, t, N, v_grid, opt, c.values, se);
    c.std_err = std::move(se);
    c.samples = opt.mc_samples;
    c.seed = opt.seed;
  }
  return c;
}

DensityCurve density_uN_det(const HeatProblem& p, double x, double t, int N,
                            std::span<const double> u_grid, const DensityOptions& opt) {
  if (p.bc_A().is_random() || p.bc_B().is_random())
    throw InvalidParameter("density_uN_det requires deterministic boundary values");
  if (!(x >= p.L1() && x <= p.L2())) throw OutOfDomain("x outside [L1, L2]");
  const double shift = p.boundary_line(x, p.bc_A().value(), p.bc_B().value());
  std::vector<double> v(u_grid.begin(), u_grid.end());
  for (double& e : v) e -= shift;
  DensityCurve c = density_vN(canonicalize(p), p.to_canonical(x), t, N, v, opt);
  c.x = x;
  c.grid.assign(u_grid.begin(), u_grid.end());
  return c;
}

DensityCurve density_uN_random(const HeatProblem& p, double x, double t, int N,
                               std::span<const double> u_grid, const DensityOptions& opt) {
  if (!(x >= p.L1() && x <= p.L2())) throw OutOfDomain("x outside [L1, L2]");
  const double y = p.to_canonical(x);
  check_y(y);
  check_grid(u_grid);

  struct Side {
    const BoundaryValue* bc;
    double weight;
    double lo, hi;
    std::vector<double> pts;
  };
  std::vector<std::string> notes;
  auto side = [&](const BoundaryValue& bc, double weight, const char* name) {
    Side s{&bc, weight, bc.mean(), bc.mean(), {}};
    if (!bc.is_random()) {
      s.lo = s.hi = bc.value();
      return s;
    }
    const Support sup = bc.law().support();
    s.lo = sup.lo;
    s.hi = sup.hi;
    if (!std::isfinite(s.lo) || !std::isfinite(s.hi)) {
      const Support eff = bc.law().effective_support(opt.bc_tail_mass);
      s.lo = eff.lo;
      s.hi = eff.hi;
      std::ostringstream os;
      os.precision(10);
      os << name << " truncated to [" << s.lo << ", " << s.hi << "] (tail mass "
         << opt.bc_tail_mass << " per side)";
      notes.push_back(os.str());
    }
    s.pts = breakpoints(bc.law(), s.lo, s.hi);
    return s;
  };
  const Side A = side(p.bc_A(), p.weight_A(x), "bc_A");
  const Side B = side(p.bc_B(), p.weight_B(x), "bc_B");

  // f_vN is needed on u - wA a - wB b over the grid and both supports.
  const double vlo = u_grid.front() - A.weight * A.hi - B.weight * B.hi;
  const double vhi = u_grid.back() - A.weight * A.lo - B.weight * B.lo;
  const std::size_t m = std::max<std::size_t>(opt.interp_points, 8);
  const auto vg = linspace(vlo, vhi, m);
  const DensityCurve fv = density_vN(canonicalize(p), y, t, N, vg, opt);
  const double h = (vhi - vlo) / static_cast<double>(m - 1);
  const boost::math::interpolators::cardinal_cubic_b_spline<double> spline(fv.values.data(), m,
                                                                           vlo, h);
  auto f_v = [&](double v) {
    if (v < vlo || v > vhi) return 0.0;
    return std::max(0.0, spline(v));
  };

  const quad::Options qo{1e-12, opt.rel_tol, 400};
  auto integrate_side = [&](const Side& s, auto&& g) {
    // E over one boundary law of g(value).
    if (!s.bc->is_random()) return g(s.bc->value());
    const Distribution& law = s.bc->law();
    return quad::integrate([&](double a) { return law.pdf(a) * g(a); },
                           std::span<const double>(s.pts), qo)
        .value;
  };

  DensityCurve c;
  c.x = x;
  c.t = t;
  c.N = N;
  c.grid.assign(u_grid.begin(), u_grid.end());
  c.values.assign(u_grid.size(), 0.0);
  c.estimator = fv.estimator;
  c.samples = fv.samples;
  c.seed = fv.seed;
  c.notes = std::move(notes);
  parallel_for_index(u_grid.size(), [&](std::size_t i) {
    const double u = u_grid[i];
    const double val = integrate_side(A, [&](double a) {
      return integrate_side(B, [&](double b) { return f_v(u - A.weight * a - B.weight * b); });
    });
    c.values[i] = std::max(0.0, val);
  });
  return c;
}

DensityCurve density_uN(const HeatProblem& p, double x, double t, int N,
                        std::span<const double> u_grid, const DensityOptions& opt) {
  if (p.deterministic_bcs()) return density_uN_det(p, x, t, N, u_grid, opt);
  return density_uN_random(p, x, t, N, u_grid, opt);
}

std::optional<double> tail_bound(const HeatProblem& p, double x, double t, int N) {
  if (N < 1) throw InvalidParameter("truncation order must be >= 1");
  const double y = p.to_canonical(x);
  check_y(y);
  const auto lip_xi = p.psi().coeff_law().lipschitz_constant();
  const double nu1 = p.psi().eigenvalue(1);
  if (!lip_xi || nu1 == 0.0) return std::nullopt;
  const double lip = *lip_xi / (2.0 * nu1);

  const double len2 = p.length() * p.length();
  auto term = [&](double n) -> std::optional<double> {
    try {
      return p.alpha2().mgf(-(n * n - 2.0) * kPi2 * t / len2);
    } catch (const DomainError&) {
      return std::nullopt;
    }
  };
  double sum = 0.0;
  constexpr long kMaxTerms = 1'000'000;
  long n = N + 1;
  for (; n <= N + kMaxTerms; ++n) {
    const auto v = term(static_cast<double>(n));
    if (!v) return std::nullopt;
    sum += *v;
    if (*v < 1e-16) break;
  }
  if (n > N + kMaxTerms) {
    // Slowly decaying terms: close the series with an integral tail.
    const double pts[2] = {static_cast<double>(n) + 0.5, std::numeric_limits<double>::infinity()};
    const auto r = quad::integrate([&](double s) { return term(s).value_or(0.0); },
                                   std::span<const double>(pts, 2));
    if (!r.converged) return std::numeric_limits<double>::infinity();
    sum += r.value;
  }
  const double s = boost::math::sin_pi(y);
  return 2.0 * p.psi().l2_norm() * lip / (s * s) * sum;
}

std::optional<double> uN_variance(const HeatProblem& p, double x, double t, int N) {
  const double y = p.to_canonical(x);
  const double len2 = p.length() * p.length();
  double var = 0.0;
  for (int n = 1; n <= N; ++n) {
    std::optional<double> m;
    try {
      m = p.alpha2().mgf(-2.0 * n * n * kPi2 * t / len2);
    } catch (const DomainError&) {
      return std::nullopt;
    }
    if (!m) return std::nullopt;
    const double s = boost::math::sin_pi(n * y);
    var += 2.0 * p.psi().eigenvalue(n) * s * s * *m * p.psi().coeff_law().variance();
  }
  const double wa = p.weight_A(x), wb = p.weight_B(x);
  return var + wa * wa * p.bc_A().variance() + wb * wb * p.bc_B().variance();
}

std::vector<double> default_grid(const HeatProblem& p, double x, double t, int N,
                                 std::size_t points, std::uint64_t seed) {
  const double mean = boundary_mean_line(p, x);
  double var;
  if (const auto v = uN_variance(p, x, t, N)) {
    var = *v;
  } else {
    const auto s = sample_uN(p, x, t, N, 10000, seed);
    double m = 0.0;
    for (double e : s) m += e;
    m /= static_cast<double>(s.size());
    double q = 0.0;
    for (double e : s) q += (e - m) * (e - m);
    var = q / static_cast<double>(s.size() - 1);
  }
  if (!(var > 0.0)) throw InvalidParameter("u_N(x, t) has zero variance; no density exists");
  const double sd = std::sqrt(var);
  return linspace(mean - 6.0 * sd, mean + 6.0 * sd, points);
}

}  // namespace heatdens

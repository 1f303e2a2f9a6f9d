#pragma once

// Globally adaptive Gauss-Kronrod (G10/K21) quadrature, scalar and
// vector-valued, over finite, semi-infinite and infinite ranges.
//
// The vector form integrates many integrands that share one abscissa set;
// the density engine uses it for the outer diffusion-coefficient integral so
// that every evaluation point of a curve reuses the same conditional density.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <queue>
#include <span>
#include <vector>

namespace heatdens::quad {

struct Options {
  double abs_tol = 1e-12;
  double rel_tol = 1e-8;
  std::size_t max_subdivisions = 500;
};

template <class T>
struct Result {
  T value{};
  double error = 0.0;
  std::size_t evaluations = 0;
  bool converged = true;
};

namespace detail {

// QUADPACK qk21 abscissae and weights.
inline constexpr double xgk[11] = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.0};
inline constexpr double wgk[11] = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077600525478292, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};
inline constexpr double wg[5] = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};

inline constexpr double kEps = std::numeric_limits<double>::epsilon();

// Error estimate of one panel, QUADPACK style.
inline double panel_error(double resk, double resg, double resabs, double resasc,
                          double half) {
  double err = std::abs((resk - resg) * half);
  resasc *= std::abs(half);
  resabs *= std::abs(half);
  if (resasc != 0.0 && err != 0.0)
    err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  if (resabs > std::numeric_limits<double>::min() / (50.0 * kEps))
    err = std::max(50.0 * kEps * resabs, err);
  return err;
}

enum class MapKind { Finite, UpperInfinite, LowerInfinite };

// One integration piece. Finite pieces are integrated in x; semi-infinite
// pieces in s in [0,1) with x = anchor +/- s/(1-s).
struct Piece {
  MapKind kind;
  double anchor;
};

inline double mapped_eval(const Piece& p, double s, double& jac) {
  switch (p.kind) {
    case MapKind::Finite:
      jac = 1.0;
      return s;
    case MapKind::UpperInfinite: {
      const double r = 1.0 / (1.0 - s);
      jac = r * r;
      return p.anchor + s * r;
    }
    case MapKind::LowerInfinite: {
      const double r = 1.0 / (1.0 - s);
      jac = r * r;
      return p.anchor - s * r;
    }
  }
  jac = 1.0;
  return s;
}

// Converts an ordered list of points (ends may be infinite) into pieces with
// their finite parameter ranges.
struct Span {
  Piece piece;
  double lo;
  double hi;
};

inline std::vector<Span> make_spans(std::span<const double> points) {
  std::vector<Span> spans;
  for (std::size_t i = 0; i + 1 < points.size(); ++i) {
    double a = points[i];
    double b = points[i + 1];
    if (!(b > a)) continue;
    const bool ia = std::isinf(a);
    const bool ib = std::isinf(b);
    if (!ia && !ib) {
      spans.push_back({{MapKind::Finite, 0.0}, a, b});
    } else if (ia && ib) {
      spans.push_back({{MapKind::LowerInfinite, 0.0}, 0.0, 1.0});
      spans.push_back({{MapKind::UpperInfinite, 0.0}, 0.0, 1.0});
    } else if (ib) {
      spans.push_back({{MapKind::UpperInfinite, a}, 0.0, 1.0});
    } else {
      spans.push_back({{MapKind::LowerInfinite, b}, 0.0, 1.0});
    }
  }
  return spans;
}

struct Segment {
  std::size_t span;
  double lo;
  double hi;
  double error;
  std::size_t slot;  // index into the value store
  bool operator<(const Segment& o) const { return error < o.error; }
};

}  // namespace detail

/// Integrates f over consecutive intervals between `points` (sorted; the
/// first and last entries may be -inf / +inf). Interior points mark known
/// kinks or jumps of the integrand.
template <class F>
Result<double> integrate(const F& f, std::span<const double> points, const Options& opt = {}) {
  using namespace detail;
  const auto spans = make_spans(points);
  Result<double> out;
  if (spans.empty()) return out;

  std::vector<double> values;
  std::priority_queue<Segment> heap;
  double total = 0.0;
  double total_err = 0.0;

  auto rule = [&](std::size_t si, double lo, double hi, double& err) {
    const Piece& pc = spans[si].piece;
    const double center = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);
    double jac;
    const double fc = f(mapped_eval(pc, center, jac)) * jac;
    double resk = fc * wgk[10];
    double resg = 0.0;
    double resabs = std::abs(resk);
    double fv1[10], fv2[10];
    for (int j = 0; j < 10; ++j) {
      const double dx = half * xgk[j];
      double j1, j2;
      const double f1 = f(mapped_eval(pc, center - dx, j1)) * j1;
      const double f2 = f(mapped_eval(pc, center + dx, j2)) * j2;
      fv1[j] = f1;
      fv2[j] = f2;
      resk += wgk[j] * (f1 + f2);
      resabs += wgk[j] * (std::abs(f1) + std::abs(f2));
      if (j % 2 == 1) resg += wg[j / 2] * (f1 + f2);
    }
    const double reskh = resk * 0.5;
    double resasc = wgk[10] * std::abs(fc - reskh);
    for (int j = 0; j < 10; ++j)
      resasc += wgk[j] * (std::abs(fv1[j] - reskh) + std::abs(fv2[j] - reskh));
    out.evaluations += 21;
    err = panel_error(resk, resg, resabs, resasc, half);
    return resk * half;
  };

  for (std::size_t si = 0; si < spans.size(); ++si) {
    double err;
    const double v = rule(si, spans[si].lo, spans[si].hi, err);
    values.push_back(v);
    heap.push({si, spans[si].lo, spans[si].hi, err, values.size() - 1});
    total += v;
    total_err += err;
  }

  std::size_t subdivisions = spans.size();
  while (total_err > std::max(opt.abs_tol, opt.rel_tol * std::abs(total))) {
    if (subdivisions >= opt.max_subdivisions) {
      out.converged = false;
      break;
    }
    Segment s = heap.top();
    const double mid = 0.5 * (s.lo + s.hi);
    if (!(mid > s.lo && mid < s.hi) || (s.hi - s.lo) < 1e-14 * std::max(1.0, std::abs(mid))) {
      out.converged = false;
      break;
    }
    heap.pop();
    double e1, e2;
    const double v1 = rule(s.span, s.lo, mid, e1);
    const double v2 = rule(s.span, mid, s.hi, e2);
    total += v1 + v2 - values[s.slot];
    total_err += e1 + e2 - s.error;
    values[s.slot] = v1;
    values.push_back(v2);
    heap.push({s.span, s.lo, mid, e1, s.slot});
    heap.push({s.span, mid, s.hi, e2, values.size() - 1});
    ++subdivisions;
  }

  // Re-sum to shed accumulated round-off from incremental updates.
  total = 0.0;
  for (double v : values) total += v;
  out.value = total;
  out.error = total_err;
  return out;
}

template <class F>
Result<double> integrate(const F& f, double a, double b, const Options& opt = {}) {
  const double pts[2] = {a, b};
  return integrate(f, std::span<const double>(pts, 2), opt);
}

/// Vector-valued variant: f(x, out) fills `out` (size dim) with the integrand
/// components at x. Refinement is driven by the largest component error and
/// the tolerance is relative to the largest component magnitude.
template <class F>
Result<std::vector<double>> integrate_vector(const F& f, std::size_t dim,
                                             std::span<const double> points,
                                             const Options& opt = {}) {
  using namespace detail;
  const auto spans = make_spans(points);
  Result<std::vector<double>> out;
  out.value.assign(dim, 0.0);
  if (spans.empty() || dim == 0) return out;

  std::vector<std::vector<double>> values;
  std::priority_queue<Segment> heap;
  std::vector<double> total(dim, 0.0);
  double total_err = 0.0;

  std::vector<std::vector<double>> fx(21, std::vector<double>(dim));
  auto rule = [&](std::size_t si, double lo, double hi, double& err) {
    const Piece& pc = spans[si].piece;
    const double center = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);
    // Node order: 0..9 left, 10 centre, 11..20 right.
    for (int j = 0; j < 21; ++j) {
      const double s = j < 10 ? center - half * xgk[j]
                     : j == 10 ? center
                               : center + half * xgk[j - 11];
      double jac;
      const double x = mapped_eval(pc, s, jac);
      f(x, std::span<double>(fx[j]));
      for (auto& v : fx[j]) v *= jac;
    }
    out.evaluations += 21;
    std::vector<double> res(dim);
    err = 0.0;
    for (std::size_t c = 0; c < dim; ++c) {
      double resk = wgk[10] * fx[10][c];
      double resg = 0.0;
      double resabs = std::abs(resk);
      for (int j = 0; j < 10; ++j) {
        const double f1 = fx[j][c];
        const double f2 = fx[j + 11][c];
        resk += wgk[j] * (f1 + f2);
        resabs += wgk[j] * (std::abs(f1) + std::abs(f2));
        if (j % 2 == 1) resg += wg[j / 2] * (f1 + f2);
      }
      const double reskh = resk * 0.5;
      double resasc = wgk[10] * std::abs(fx[10][c] - reskh);
      for (int j = 0; j < 10; ++j)
        resasc += wgk[j] * (std::abs(fx[j][c] - reskh) + std::abs(fx[j + 11][c] - reskh));
      err = std::max(err, panel_error(resk, resg, resabs, resasc, half));
      res[c] = resk * half;
    }
    return res;
  };

  auto norm = [](const std::vector<double>& v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
  };

  for (std::size_t si = 0; si < spans.size(); ++si) {
    double err;
    values.push_back(rule(si, spans[si].lo, spans[si].hi, err));
    for (std::size_t c = 0; c < dim; ++c) total[c] += values.back()[c];
    heap.push({si, spans[si].lo, spans[si].hi, err, values.size() - 1});
    total_err += err;
  }

  std::size_t subdivisions = spans.size();
  while (total_err > std::max(opt.abs_tol, opt.rel_tol * norm(total))) {
    if (subdivisions >= opt.max_subdivisions) {
      out.converged = false;
      break;
    }
    Segment s = heap.top();
    const double mid = 0.5 * (s.lo + s.hi);
    if (!(mid > s.lo && mid < s.hi) || (s.hi - s.lo) < 1e-14 * std::max(1.0, std::abs(mid))) {
      out.converged = false;
      break;
    }
    heap.pop();
    double e1, e2;
    auto v1 = rule(s.span, s.lo, mid, e1);
    auto v2 = rule(s.span, mid, s.hi, e2);
    for (std::size_t c = 0; c < dim; ++c) total[c] += v1[c] + v2[c] - values[s.slot][c];
    total_err += e1 + e2 - s.error;
    values[s.slot] = std::move(v1);
    values.push_back(std::move(v2));
    heap.push({s.span, s.lo, mid, e1, s.slot});
    heap.push({s.span, mid, s.hi, e2, values.size() - 1});
    ++subdivisions;
  }

  for (const auto& v : values)
    for (std::size_t c = 0; c < dim; ++c) out.value[c] += v[c];
  out.error = total_err;
  return out;
}

}  // namespace heatdens::quad

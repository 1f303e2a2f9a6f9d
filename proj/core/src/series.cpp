#include "heatdens/series.hpp"

#include <cmath>
#include <numbers>

#include <boost/math/special_functions/sin_pi.hpp>

#include "heatdens/errors.hpp"
#include "heatdens/parallel.hpp"

namespace heatdens {

double eval_vN(const SeriesSample& s, double y, double t) {
  const double k = std::numbers::pi * std::numbers::pi * s.beta2 * t;
  double v = 0.0;
  for (std::size_t i = 0; i < s.coeffs.size(); ++i) {
    const double n = static_cast<double>(i + 1);
    v += s.coeffs[i] * std::exp(-n * n * k) * boost::math::sin_pi(n * y);
  }
  return v;
}

double eval_uN(const HeatProblem& p, const SeriesSample& s, double x, double t) {
  if (!(x >= p.L1() && x <= p.L2())) throw OutOfDomain("x outside [L1, L2]");
  return eval_vN(s, p.to_canonical(x), t) + p.boundary_line(x, s.a, s.b);
}

SeriesSample draw_sample(const HeatProblem& p, int N, Rng& rng) {
  SeriesSample s;
  s.beta2 = p.alpha2().sample(rng) / (p.length() * p.length());
  s.coeffs = p.psi().sample_coeffs(N, rng);
  s.a = p.bc_A().sample(rng);
  s.b = p.bc_B().sample(rng);
  return s;
}

std::vector<SeriesSample> draw_solution_samples(const HeatProblem& p, int N, std::size_t count,
                                                std::uint64_t seed) {
  std::vector<SeriesSample> out(count);
  parallel_for_chunks(make_chunks(count, kSampleChunk), [&](const Chunk& c) {
    Rng rng = make_rng(seed, c.index);
    for (std::size_t i = c.begin; i < c.end; ++i) out[i] = draw_sample(p, N, rng);
  });
  return out;
}

std::vector<double> sample_uN(const HeatProblem& p, double x, double t, int N, std::size_t count,
                              std::uint64_t seed) {
  if (!(x >= p.L1() && x <= p.L2())) throw OutOfDomain("x outside [L1, L2]");
  std::vector<double> out(count);
  parallel_for_chunks(make_chunks(count, kSampleChunk), [&](const Chunk& c) {
    Rng rng = make_rng(seed, c.index);
    for (std::size_t i = c.begin; i < c.end; ++i) out[i] = eval_uN(p, draw_sample(p, N, rng), x, t);
  });
  return out;
}

}  // namespace heatdens

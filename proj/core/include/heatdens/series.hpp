#pragma once

#include <cstdint>
#include <vector>

#include "heatdens/heat_problem.hpp"
#include "heatdens/rng.hpp"

namespace heatdens {

/// One realization of the inputs of the truncated series.
struct SeriesSample {
  double beta2 = 0.0;
  std::vector<double> coeffs;  // A_1..A_N
  double a = 0.0;
  double b = 0.0;
};

/// v_N(y, t) = sum_n A_n exp(-n^2 pi^2 beta^2 t) sin(n pi y).
double eval_vN(const SeriesSample& s, double y, double t);

/// u_N(x, t) = v_N(y, t) + boundary line; x = L1, L2 give a, b exactly.
double eval_uN(const HeatProblem& p, const SeriesSample& s, double x, double t);

/// Draws beta^2, A_1..A_N, A, B in that order from one stream.
SeriesSample draw_sample(const HeatProblem& p, int N, Rng& rng);

/// `count` independent samples. Chunk c uses substream c of `seed`, so the
/// result does not depend on the worker count.
std::vector<SeriesSample> draw_solution_samples(const HeatProblem& p, int N, std::size_t count,
                                                std::uint64_t seed);

/// u_N(x, t) for `count` independent draws, seed-stable like draw_solution_samples.
std::vector<double> sample_uN(const HeatProblem& p, double x, double t, int N, std::size_t count,
                              std::uint64_t seed);

/// Draws per chunk in the seeded samplers.
inline constexpr std::size_t kSampleChunk = 16384;

}  // namespace heatdens

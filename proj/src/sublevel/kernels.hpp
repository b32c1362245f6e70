#pragma once

// Sample-counting kernels behind sublevel_measure. The serial kernel is the
// reference; the OpenMP kernel must return identical counts for every input.

#include "newton_sobolev/poly.hpp"
#include "newton_sobolev/sublevel.hpp"

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace newton_sobolev::kernels {

// Flat double-precision copy of a polynomial for the hot loop.
struct CompiledPoly {
  std::vector<double> coeff;
  std::vector<std::uint32_t> a;
  std::vector<std::uint32_t> b;
  std::uint32_t max_a = 0;
  std::uint32_t max_b = 0;

  explicit CompiledPoly(const Poly2& p);

  // xp and yp are scratch buffers of size max_a + 1 and max_b + 1.
  double eval(double x, double y, double* xp, double* yp) const {
    xp[0] = 1.0;
    for (std::uint32_t i = 1; i <= max_a; ++i) xp[i] = xp[i - 1] * x;
    yp[0] = 1.0;
    for (std::uint32_t i = 1; i <= max_b; ++i) yp[i] = yp[i - 1] * y;
    double s = 0.0;
    for (std::size_t t = 0; t < coeff.size(); ++t) s += coeff[t] * xp[a[t]] * yp[b[t]];
    return s;
  }
};

struct RungTask {
  double delta = 0;
  double half_width = 0;
  std::uint64_t samples = 0;  // requested; grid rounds down to a square
  Sampler sampler = Sampler::prng;
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;
};

inline constexpr std::uint64_t kChunk = std::uint64_t{1} << 14;

// Number of points actually evaluated for a task.
std::uint64_t effective_samples(const RungTask& task);

// Hits among the points of one chunk of the task's point sequence. Each
// chunk owns its generator state, so chunks can run in any order.
std::uint64_t count_chunk(const CompiledPoly& g, const RungTask& task, std::uint64_t chunk);

inline std::uint64_t chunk_count(const RungTask& task) {
  return (effective_samples(task) + kChunk - 1) / kChunk;
}

std::uint64_t count_hits_serial(const CompiledPoly& g, const RungTask& task);
std::uint64_t count_hits_omp(const CompiledPoly& g, const RungTask& task);

}  // namespace newton_sobolev::kernels

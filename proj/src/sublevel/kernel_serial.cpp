#include "kernels.hpp"

#include <algorithm>

namespace newton_sobolev::kernels {

CompiledPoly::CompiledPoly(const Poly2& p) {
  for (const auto& [e, c] : p.terms()) {
    coeff.push_back(c.get_d());
    a.push_back(e.a);
    b.push_back(e.b);
    max_a = std::max(max_a, e.a);
    max_b = std::max(max_b, e.b);
  }
}

std::uint64_t effective_samples(const RungTask& task) {
  if (task.sampler == Sampler::grid) {
    auto n = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(task.samples)));
    while (n * n > task.samples) --n;
    while ((n + 1) * (n + 1) <= task.samples) ++n;
    return n * n;
  }
  return task.samples;
}

namespace {

inline double unit_from_bits(std::uint64_t u) { return static_cast<double>(u >> 11) * 0x1.0p-53; }

inline double radical_inverse(std::uint64_t i, std::uint64_t base) {
  const double inv = 1.0 / static_cast<double>(base);
  double f = inv, r = 0.0;
  while (i > 0) {
    r += static_cast<double>(i % base) * f;
    i /= base;
    f *= inv;
  }
  return r;
}

}  // namespace

std::uint64_t count_chunk(const CompiledPoly& g, const RungTask& task, std::uint64_t chunk) {
  const std::uint64_t total = effective_samples(task);
  const std::uint64_t begin = chunk * kChunk;
  const std::uint64_t end = std::min(total, begin + kChunk);
  const double r = task.half_width;
  std::vector<double> xp(g.max_a + 1), yp(g.max_b + 1);
  std::uint64_t hits = 0;

  auto test = [&](double u, double v) {
    // (u, v) in [0, 1)^2 maps onto [-r, r)^2
    double x = (2.0 * u - 1.0) * r;
    double y = (2.0 * v - 1.0) * r;
    if (std::abs(g.eval(x, y, xp.data(), yp.data())) < task.delta) ++hits;
  };

  switch (task.sampler) {
    case Sampler::prng: {
      std::seed_seq seq{static_cast<std::uint32_t>(task.seed), static_cast<std::uint32_t>(task.seed >> 32),
                        static_cast<std::uint32_t>(task.stream), static_cast<std::uint32_t>(chunk),
                        static_cast<std::uint32_t>(chunk >> 32)};
      std::mt19937_64 gen(seq);
      for (std::uint64_t i = begin; i < end; ++i) {
        double u = unit_from_bits(gen());
        double v = unit_from_bits(gen());
        test(u, v);
      }
      break;
    }
    case Sampler::halton:
      for (std::uint64_t i = begin; i < end; ++i) test(radical_inverse(i + 1, 2), radical_inverse(i + 1, 3));
      break;
    case Sampler::grid: {
      // midpoints of an n x n grid of cells
      const auto n = static_cast<std::uint64_t>(std::llround(std::sqrt(static_cast<double>(total))));
      const double inv = 1.0 / static_cast<double>(n);
      for (std::uint64_t i = begin; i < end; ++i) {
        std::uint64_t ix = i % n, iy = i / n;
        test((static_cast<double>(ix) + 0.5) * inv, (static_cast<double>(iy) + 0.5) * inv);
      }
      break;
    }
  }
  return hits;
}

std::uint64_t count_hits_serial(const CompiledPoly& g, const RungTask& task) {
  std::uint64_t hits = 0;
  const std::uint64_t chunks = chunk_count(task);
  for (std::uint64_t c = 0; c < chunks; ++c) hits += count_chunk(g, task, c);
  return hits;
}

}  // namespace newton_sobolev::kernels

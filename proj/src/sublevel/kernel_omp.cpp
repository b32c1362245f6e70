#include "kernels.hpp"

#include <omp.h>

namespace newton_sobolev::kernels {

std::uint64_t count_hits_omp(const CompiledPoly& g, const RungTask& task) {
  const auto chunks = static_cast<std::int64_t>(chunk_count(task));
  std::uint64_t hits = 0;
#pragma omp parallel for reduction(+ : hits) schedule(dynamic, 4)
  for (std::int64_t c = 0; c < chunks; ++c) hits += count_chunk(g, task, static_cast<std::uint64_t>(c));
  return hits;
}

}  // namespace newton_sobolev::kernels

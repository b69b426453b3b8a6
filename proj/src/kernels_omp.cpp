#include <omp.h>

#include "kernel_common.hpp"
#include "wenger/kernels.hpp"
#include "wenger/linearized.hpp"

namespace wenger::parallel {

std::vector<std::uint64_t> root_histogram(const Family& family) {
  const std::uint64_t q = family.q();
  std::uint64_t count = 1;
  for (unsigned j = 0; j <= family.m(); ++j) count *= q;
  std::vector<std::uint64_t> hist(q + 1, 0);
  const auto n = static_cast<std::int64_t>(count);

#pragma omp parallel
  {
    std::vector<std::uint64_t> local(q + 1, 0);
#pragma omp for schedule(static) nowait
    for (std::int64_t idx = 0; idx < n; ++idx) {
      ++local[count_roots(LinPoly(family, weight_from_index(family, static_cast<std::uint64_t>(idx))))];
    }
#pragma omp critical(wenger_histogram_merge)
    for (std::size_t i = 0; i < local.size(); ++i) hist[i] += local[i];
  }
  return hist;
}

std::vector<std::uint32_t> eccentricities(const Adjacency& adj) {
  const auto n = static_cast<std::int64_t>(adj.vertex_count());
  std::vector<std::uint32_t> ecc(static_cast<std::size_t>(n), 0);

#pragma omp parallel
  {
    detail::BfsScratch scratch(static_cast<std::size_t>(n));
#pragma omp for schedule(dynamic, 64)
    for (std::int64_t v = 0; v < n; ++v) ecc[v] = detail::eccentricity_from(adj, static_cast<std::uint32_t>(v), scratch);
  }
  return ecc;
}

std::uint32_t girth(const Adjacency& adj) {
  const auto n = static_cast<std::int64_t>(adj.vertex_count());
  std::uint32_t best = detail::kUnreached;

#pragma omp parallel reduction(min : best)
  {
    detail::BfsScratch scratch(static_cast<std::size_t>(n));
#pragma omp for schedule(dynamic, 64)
    for (std::int64_t v = 0; v < n; ++v) {
      best = std::min(best, detail::shortest_cycle_from(adj, static_cast<std::uint32_t>(v), best, scratch));
    }
  }
  return best == detail::kUnreached ? 0 : best;
}

BigInt closed_walks(const Adjacency& adj, unsigned k) {
  detail::check_walk_bounds(adj, k);
  const auto n = static_cast<std::int64_t>(adj.vertex_count());
  BigInt total = 0;

#pragma omp parallel
  {
    detail::WalkScratch scratch(static_cast<std::size_t>(n));
    unsigned __int128 local = 0;
#pragma omp for schedule(static) nowait
    for (std::int64_t v = 0; v < n; ++v) local += detail::closed_walks_from(adj, static_cast<std::uint32_t>(v), k, scratch);
#pragma omp critical(wenger_walk_merge)
    total += detail::to_big(local);
  }
  return total;
}

}  // namespace wenger::parallel

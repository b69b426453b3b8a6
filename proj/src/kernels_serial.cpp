#include "kernel_common.hpp"
#include "wenger/kernels.hpp"
#include "wenger/linearized.hpp"

namespace wenger::serial {

std::vector<std::uint64_t> root_histogram(const Family& family) {
  const std::uint64_t q = family.q();
  std::uint64_t count = 1;
  for (unsigned j = 0; j <= family.m(); ++j) count *= q;
  std::vector<std::uint64_t> hist(q + 1, 0);
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    ++hist[count_roots(LinPoly(family, weight_from_index(family, idx)))];
  }
  return hist;
}

std::vector<std::uint32_t> eccentricities(const Adjacency& adj) {
  const std::size_t n = adj.vertex_count();
  std::vector<std::uint32_t> ecc(n, 0);
  detail::BfsScratch scratch(n);
  for (std::size_t v = 0; v < n; ++v) ecc[v] = detail::eccentricity_from(adj, static_cast<std::uint32_t>(v), scratch);
  return ecc;
}

std::uint32_t girth(const Adjacency& adj) {
  const std::size_t n = adj.vertex_count();
  detail::BfsScratch scratch(n);
  std::uint32_t best = detail::kUnreached;
  for (std::size_t v = 0; v < n; ++v) {
    best = std::min(best, detail::shortest_cycle_from(adj, static_cast<std::uint32_t>(v), best, scratch));
  }
  return best == detail::kUnreached ? 0 : best;
}

BigInt closed_walks(const Adjacency& adj, unsigned k) {
  detail::check_walk_bounds(adj, k);
  const std::size_t n = adj.vertex_count();
  detail::WalkScratch scratch(n);
  unsigned __int128 total = 0;
  for (std::size_t v = 0; v < n; ++v) total += detail::closed_walks_from(adj, static_cast<std::uint32_t>(v), k, scratch);
  return detail::to_big(total);
}

}  // namespace wenger::serial

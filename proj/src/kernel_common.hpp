#pragma once

// Per-source building blocks shared by the serial and OpenMP kernels. Each
// takes caller-owned scratch so a thread can reuse it across sources.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "wenger/bigint.hpp"
#include "wenger/error.hpp"
#include "wenger/graph.hpp"

namespace wenger::detail {

inline constexpr std::uint32_t kUnreached = std::numeric_limits<std::uint32_t>::max();

struct BfsScratch {
  std::vector<std::uint32_t> dist;
  std::vector<std::uint32_t> parent;
  std::vector<std::uint32_t> queue;

  explicit BfsScratch(std::size_t n) : dist(n, kUnreached), parent(n, kUnreached) { queue.reserve(n); }

  void reset_touched() {
    for (std::uint32_t v : queue) dist[v] = kUnreached;
    queue.clear();
  }
};

inline std::uint32_t eccentricity_from(const Adjacency& adj, std::uint32_t source, BfsScratch& s) {
  s.dist[source] = 0;
  s.queue.push_back(source);
  std::uint32_t ecc = 0;
  for (std::size_t head = 0; head < s.queue.size(); ++head) {
    const std::uint32_t u = s.queue[head];
    ecc = s.dist[u];
    for (std::uint32_t w : adj.neighbors(u)) {
      if (s.dist[w] == kUnreached) {
        s.dist[w] = s.dist[u] + 1;
        s.queue.push_back(w);
      }
    }
  }
  s.reset_touched();
  return ecc;
}

/// Shortest cycle through the BFS tree rooted at `source`, pruned once no
/// cycle shorter than `best` can still appear. Returns kUnreached if none.
inline std::uint32_t shortest_cycle_from(const Adjacency& adj, std::uint32_t source, std::uint32_t best,
                                         BfsScratch& s) {
  std::uint32_t found = kUnreached;
  s.dist[source] = 0;
  s.parent[source] = kUnreached;
  s.queue.push_back(source);
  for (std::size_t head = 0; head < s.queue.size(); ++head) {
    const std::uint32_t u = s.queue[head];
    const std::uint32_t limit = std::min(best, found);
    if (limit != kUnreached && 2 * s.dist[u] + 1 >= limit) break;
    for (std::uint32_t w : adj.neighbors(u)) {
      if (s.dist[w] == kUnreached) {
        s.dist[w] = s.dist[u] + 1;
        s.parent[w] = u;
        s.queue.push_back(w);
      } else if (w != s.parent[u]) {
        found = std::min(found, s.dist[u] + s.dist[w] + 1);
      }
    }
  }
  s.reset_touched();
  return found;
}

struct WalkScratch {
  std::vector<std::uint64_t> cur;
  std::vector<std::uint64_t> next;
  std::vector<std::uint32_t> cur_touched;
  std::vector<std::uint32_t> next_touched;

  explicit WalkScratch(std::size_t n) : cur(n, 0), next(n, 0) {}
};

/// Throws unless every walk count up to length k fits comfortably in 64 bits.
inline void check_walk_bounds(const Adjacency& adj, unsigned k) {
  if (k < 1 || k > 4) throw Error(ErrorCode::invalid_argument, "walk length k must be in [1, 4]");
  std::uint64_t max_deg = 0;
  for (std::size_t v = 0; v < adj.vertex_count(); ++v) max_deg = std::max<std::uint64_t>(max_deg, adj.neighbors(v).size());
  std::uint64_t bound = 1;
  for (unsigned i = 0; i < k; ++i) {
    bound *= std::max<std::uint64_t>(max_deg, 1);
    if (bound >= (std::uint64_t{1} << 32)) {
      throw Error(ErrorCode::budget_exceeded, "walk counts of length " + std::to_string(k) + " overflow 64-bit squares");
    }
  }
}

/// sum_u ((A^k)_{source,u})^2: the closed 2k-walks at `source`.
inline unsigned __int128 closed_walks_from(const Adjacency& adj, std::uint32_t source, unsigned k, WalkScratch& s) {
  s.cur[source] = 1;
  s.cur_touched.assign(1, source);
  for (unsigned step = 0; step < k; ++step) {
    for (std::uint32_t u : s.cur_touched) {
      const std::uint64_t c = s.cur[u];
      for (std::uint32_t w : adj.neighbors(u)) {
        if (s.next[w] == 0) s.next_touched.push_back(w);
        s.next[w] += c;
      }
      s.cur[u] = 0;
    }
    std::swap(s.cur, s.next);
    std::swap(s.cur_touched, s.next_touched);
    s.next_touched.clear();
  }
  unsigned __int128 total = 0;
  for (std::uint32_t u : s.cur_touched) {
    total += static_cast<unsigned __int128>(s.cur[u]) * s.cur[u];
    s.cur[u] = 0;
  }
  s.cur_touched.clear();
  return total;
}

inline BigInt to_big(unsigned __int128 v) {
  BigInt r = static_cast<std::uint64_t>(v >> 64);
  r <<= 64;
  r += static_cast<std::uint64_t>(v);
  return r;
}

}  // namespace wenger::detail

#pragma once

#include <cstdint>
#include <vector>

#include "wenger/bigint.hpp"
#include "wenger/family.hpp"
#include "wenger/graph.hpp"

// The data-parallel inner loops. Each kernel exists twice with identical
// contracts: an OpenMP version used by the library and a plain serial
// reference that the tests compare it against. Results never depend on the
// thread schedule.

namespace wenger {

namespace serial {

/// hist[N] = |{w in F_q^{m+1} : F_w has exactly N roots}|, N in [0, q].
std::vector<std::uint64_t> root_histogram(const Family& family);

/// Largest BFS distance from each vertex to anything it can reach.
std::vector<std::uint32_t> eccentricities(const Adjacency& adj);

/// Length of a shortest cycle, 0 if the graph is acyclic.
std::uint32_t girth(const Adjacency& adj);

/// trace(A^{2k}) = sum_v sum_u ((A^k)_{vu})^2, exact.
BigInt closed_walks(const Adjacency& adj, unsigned k);

}  // namespace serial

namespace parallel {

std::vector<std::uint64_t> root_histogram(const Family& family);
std::vector<std::uint32_t> eccentricities(const Adjacency& adj);
std::uint32_t girth(const Adjacency& adj);
BigInt closed_walks(const Adjacency& adj, unsigned k);

}  // namespace parallel

}  // namespace wenger

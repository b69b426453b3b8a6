#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "wenger/graph.hpp"

namespace wenger {

enum class Status { pass, fail, skip };

std::string_view to_string(Status s);

struct CriterionResult {
  int id = 0;
  std::string name;
  Status status = Status::pass;
  std::string detail;
  double seconds = 0;
};

struct VerifyOptions {
  /// Cases whose graph has more vertices than this are skipped.
  std::uint64_t max_vertices = kDefaultVertexBudget;
  /// Rewire one edge of every materialized graph before checking it.
  bool perturb = false;
  std::uint64_t seed = 0;
};

inline constexpr int kCriterionCount = 11;

CriterionResult run_criterion(int id, const VerifyOptions& opts = {});
std::vector<CriterionResult> run_acceptance(const VerifyOptions& opts = {});

/// Moves the edge (P_0, L_a) to (P_0, L_b) where L_a is the first neighbor
/// of point 0 and L_b the first line not adjacent to it.
Adjacency perturb_one_edge(const Adjacency& adj, std::uint64_t side_size);

/// One line per criterion: "[PASS] 3 name  (detail)".
std::string format_result(const CriterionResult& r);

}  // namespace wenger

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <nlohmann/json.hpp>

#include "wenger/graph.hpp"

namespace wenger {

struct ComponentsResult {
  std::uint64_t count = 0;
  /// Sizes in order of each component's smallest vertex id.
  std::vector<std::uint64_t> sizes;
  /// Component index of every vertex.
  std::vector<std::uint32_t> label;
};

ComponentsResult components(const Adjacency& adj);
ComponentsResult components(const Graph& g);

struct DiameterResult {
  /// Max over components.
  std::uint32_t diameter = 0;
  std::vector<std::uint32_t> per_component;
};

/// All-sources BFS sweep.
DiameterResult diameter(const Adjacency& adj);
DiameterResult diameter(const Graph& g);

/// Throws Error(acyclic) if the graph has no cycle.
std::uint32_t girth(const Adjacency& adj);
std::uint32_t girth(const Graph& g);

/// The unique line adjacent to both points, if any. Two distinct points
/// share a neighbor iff P - P' = (u, l u, l u^p, ..., l u^{p^{m-1}}) with
/// u != 0, and then that line is [l, l p_1 - p_2, ..., l p_1^{p^{m-1}} - p_{m+1}].
/// Linearized family only.
std::optional<Vertex> common_neighbor(const Graph& g, const Vertex& p, const Vertex& p2);

/// A path between two vertices built from the Moore-type system rather
/// than by search.
///   line-line:   anchors x_i, steps t_i with L' - L = sum_i t_i (1, x_i, x_i^p, ...).
///   point-line:  the same with x_1 = p_1 so the walk passes through P.
///   point-point: steps d_i in p_1 and line coordinates c_i solving the
///                system in the remaining m coordinates.
/// `coefficients` holds t_i (or c_i), `anchors` the first coordinates of
/// the points visited; `vertices` is the walk with any revisits cut out.
struct PathWitness {
  std::vector<Vertex> vertices;
  std::vector<FieldElement> coefficients;
  std::vector<FieldElement> anchors;

  std::size_t length() const { return vertices.empty() ? 0 : vertices.size() - 1; }
};

/// Linearized family with m <= e only (UnsupportedRegime otherwise).
PathWitness diameter_witness(const Graph& g, const Vertex& a, const Vertex& b);

/// Endpoints match, consecutive vertices adjacent, no vertex repeated.
bool is_valid_path(const Graph& g, const PathWitness& w, const Vertex& a, const Vertex& b);

/// Cycle P_1 L_1 P_2 L_2 ... P_t L_t P_1 with the differences
/// P_i - P_{i+1} = (u_i, c_i u_i, c_i u_i^p, ...).
struct CycleWitness {
  std::vector<Vertex> points;
  std::vector<Vertex> lines;
  std::vector<FieldElement> u;
  std::vector<FieldElement> c;

  std::size_t length() const { return 2 * points.size(); }
};

/// Explicit 6-cycle: p odd, or p = 2 with e >= 2 and m = 1. Throws
/// NoSixCycle in the girth-8 regimes.
CycleWitness cycle_witness_6(const Graph& g);

/// Explicit 8-cycle for p = 2 with e = m = 1 or m >= 2.
CycleWitness cycle_witness_8(const Graph& g);

/// u_i all nonzero, sum u_i = 0 and sum c_i u_i^{p^j} = 0 for j < m.
/// Necessary for a cycle but not sufficient.
bool verify_cycle_system(const Graph& g, const CycleWitness& w);

/// Every consecutive pair adjacent, points pairwise distinct, lines
/// pairwise distinct.
bool is_valid_cycle(const Graph& g, const CycleWitness& w);

/// P_1 L_1 ... P_t L_t as vertex ids.
std::vector<VertexId> cycle_ids(const Graph& g, const CycleWitness& w);
std::vector<VertexId> path_ids(const Graph& g, const PathWitness& w);

/// Values the theorems predict for a family; empty where no theorem applies.
struct MetricsPrediction {
  std::optional<std::uint64_t> components;
  std::optional<std::uint32_t> diameter;
  std::optional<std::uint32_t> girth;

  friend bool operator==(const MetricsPrediction&, const MetricsPrediction&) = default;
};

MetricsPrediction predict_metrics(const Family& family);

struct MetricsReport {
  std::uint64_t components = 0;
  std::vector<std::uint64_t> sizes;
  std::uint32_t diameter = 0;
  std::vector<std::uint32_t> component_diameters;
  std::uint32_t girth = 0;
  MetricsPrediction predicted;

  std::optional<bool> components_match() const;
  std::optional<bool> diameter_match() const;
  std::optional<bool> girth_match() const;
  /// No predicted value disagrees with the measured one.
  bool all_match() const;

  friend bool operator==(const MetricsReport&, const MetricsReport&) = default;
};

MetricsReport compute_metrics(const Graph& g);
MetricsReport compute_metrics(const Graph& g, const Adjacency& adj);

nlohmann::json to_json(const MetricsReport& report);
MetricsReport metrics_report_from_json(const nlohmann::json& j);

}  // namespace wenger

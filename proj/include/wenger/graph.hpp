#pragma once

#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <memory>
#include <span>
#include <vector>

#include <nlohmann/json.hpp>

#include "wenger/family.hpp"

namespace wenger {

enum class Side : std::uint8_t { point = 0, line = 1 };

/// A point (p_1, ..., p_{m+1}) or a line [l_1, ..., l_{m+1}].
struct Vertex {
  Side side = Side::point;
  std::vector<FieldElement> coords;

  friend bool operator==(const Vertex&, const Vertex&) = default;
};

using VertexId = std::uint64_t;

enum class BuildMode { lazy, materialized };

inline constexpr std::uint64_t kDefaultVertexBudget = 2'000'000;

/// Compressed sparse rows over vertex ids. Neighbor lists are sorted.
struct Adjacency {
  std::vector<std::uint64_t> offsets;
  std::vector<std::uint32_t> targets;

  std::size_t vertex_count() const { return offsets.empty() ? 0 : offsets.size() - 1; }
  std::size_t edge_count() const { return targets.size() / 2; }
  std::span<const std::uint32_t> neighbors(std::size_t v) const {
    return {targets.data() + offsets[v], targets.data() + offsets[v + 1]};
  }
};

/// The bipartite graph on two copies of F_q^{m+1} where P ~ L iff
/// l_k + p_k = f_k(p_1) l_1 for k = 2..m+1.
///
/// Neighbors are solved on demand; materialized mode additionally stores
/// the CSR adjacency that the BFS-based metrics run on. Immutable after
/// construction.
class Graph {
 public:
  explicit Graph(FamilySpec spec, BuildMode mode = BuildMode::lazy, std::uint64_t vertex_budget = kDefaultVertexBudget);

  const Family& family() const { return family_; }
  const Field& field() const { return family_.field(); }
  unsigned m() const { return family_.m(); }
  std::uint64_t q() const { return family_.q(); }
  std::uint64_t vertex_budget() const { return budget_; }

  /// q^{m+1}: vertices per side.
  std::uint64_t side_size() const { return side_size_; }
  std::uint64_t vertex_count() const { return 2 * side_size_; }
  std::uint64_t edge_count() const { return side_size_ * q(); }
  std::uint64_t degree() const { return q(); }
  /// False flags a custom family outside the spectral theorem's hypothesis.
  bool injective_theta() const { return family_.theta_injective(); }

  Vertex point(std::vector<FieldElement> coords) const;
  Vertex line(std::vector<FieldElement> coords) const;
  /// Vertex with prime-field coordinates; negative values wrap mod p.
  Vertex vertex_fp(Side side, std::initializer_list<std::int64_t> coords) const;

  bool adjacent(const Vertex& a, const Vertex& b) const;

  /// q lines, one per l_1 in canonical order.
  std::vector<Vertex> neighbors_of_point(const Vertex& p) const;
  /// q points, one per p_1 in canonical order.
  std::vector<Vertex> neighbors_of_line(const Vertex& l) const;
  std::vector<Vertex> neighbors(const Vertex& v) const;

  /// id = side * q^{m+1} + sum_j index(v_j) q^j.
  VertexId encode(const Vertex& v) const;
  Vertex decode(VertexId id) const;

  bool is_materialized() const { return adjacency_ != nullptr; }
  /// Stored adjacency in materialized mode, otherwise built now (subject
  /// to the vertex budget).
  std::shared_ptr<const Adjacency> adjacency() const;

 private:
  void check_vertex(const Vertex& v) const;

  Family family_;
  std::uint64_t budget_;
  std::uint64_t side_size_;
  std::shared_ptr<const Adjacency> adjacency_;
};

/// Builds the CSR adjacency by solving every vertex's neighbors in parallel.
Adjacency materialize(const Graph& g);

/// S = {(t, t f_2(u), ..., t f_{m+1}(u)) : t != 0, u in F_q}, sorted by the
/// tuple's base-q index.
struct CayleySet {
  std::vector<std::vector<FieldElement>> elements;
  std::size_t size() const { return elements.size(); }
};

CayleySet cayley_generators(const Family& family);

enum class ExportFormat { edgelist, dimacs, json_meta };

/// edgelist: "u v\n" per edge, u < v, sorted. dimacs: "p edge N M" then
/// "e u v" with 1-based ids. json_meta: see graph_meta().
void export_graph(const Graph& g, ExportFormat format, std::ostream& out);

nlohmann::json graph_meta(const Graph& g);

}  // namespace wenger

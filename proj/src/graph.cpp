#include "wenger/graph.hpp"

#include <algorithm>
#include <limits>
#include <ostream>
#include <string>

#include "wenger/error.hpp"

namespace wenger {

namespace {

void check_budget(const Graph& g) {
  if (g.vertex_count() > g.vertex_budget()) {
    throw Error(ErrorCode::budget_exceeded, "graph has " + std::to_string(g.vertex_count()) +
                                                " vertices, budget is " + std::to_string(g.vertex_budget()));
  }
}

std::uint64_t checked_side_size(const Family& family) {
  std::uint64_t n = 1;
  for (unsigned j = 0; j <= family.m(); ++j) {
    if (n > std::numeric_limits<std::uint64_t>::max() / (2 * family.q())) {
      throw Error(ErrorCode::budget_exceeded, "vertex count does not fit in 64 bits");
    }
    n *= family.q();
  }
  return n;
}

}  // namespace

Graph::Graph(FamilySpec spec, BuildMode mode, std::uint64_t vertex_budget)
    : family_(std::move(spec)), budget_(vertex_budget), side_size_(checked_side_size(family_)) {
  if (mode == BuildMode::materialized) {
    adjacency_ = std::make_shared<const Adjacency>(materialize(*this));
  }
}

void Graph::check_vertex(const Vertex& v) const {
  if (v.coords.size() != m() + 1) {
    throw Error(ErrorCode::invalid_argument, "vertex must have m+1 = " + std::to_string(m() + 1) + " coordinates");
  }
  for (const auto& x : v.coords) {
    if (!field().contains(x)) throw Error(ErrorCode::field_mismatch, "vertex coordinate not in the graph's field");
  }
}

Vertex Graph::point(std::vector<FieldElement> coords) const {
  Vertex v{Side::point, std::move(coords)};
  check_vertex(v);
  return v;
}

Vertex Graph::line(std::vector<FieldElement> coords) const {
  Vertex v{Side::line, std::move(coords)};
  check_vertex(v);
  return v;
}

Vertex Graph::vertex_fp(Side side, std::initializer_list<std::int64_t> coords) const {
  const auto p = static_cast<std::int64_t>(field().characteristic());
  std::vector<FieldElement> xs;
  for (std::int64_t c : coords) xs.push_back(field().from_fp(static_cast<std::uint64_t>(((c % p) + p) % p)));
  Vertex v{side, std::move(xs)};
  check_vertex(v);
  return v;
}

bool Graph::adjacent(const Vertex& a, const Vertex& b) const {
  check_vertex(a);
  check_vertex(b);
  if (a.side == b.side) return false;
  const Vertex& pt = a.side == Side::point ? a : b;
  const Vertex& ln = a.side == Side::point ? b : a;
  const Field& f = field();
  for (unsigned k = 2; k <= m() + 1; ++k) {
    const FieldElement lhs = f.add(ln.coords[k - 1], pt.coords[k - 1]);
    const FieldElement rhs = f.mul(family_.f(k, pt.coords[0]), ln.coords[0]);
    if (!(lhs == rhs)) return false;
  }
  return true;
}

std::vector<Vertex> Graph::neighbors_of_point(const Vertex& p) const {
  check_vertex(p);
  if (p.side != Side::point) throw Error(ErrorCode::invalid_argument, "expected a point");
  const Field& f = field();
  std::vector<FieldElement> fk;
  for (unsigned k = 2; k <= m() + 1; ++k) fk.push_back(family_.f(k, p.coords[0]));

  std::vector<Vertex> out;
  out.reserve(q());
  for (std::uint64_t i = 0; i < q(); ++i) {
    Vertex l{Side::line, {}};
    l.coords.reserve(m() + 1);
    const FieldElement l1 = f.element(i);
    l.coords.push_back(l1);
    for (unsigned k = 2; k <= m() + 1; ++k) l.coords.push_back(f.sub(f.mul(fk[k - 2], l1), p.coords[k - 1]));
    out.push_back(std::move(l));
  }
  return out;
}

std::vector<Vertex> Graph::neighbors_of_line(const Vertex& l) const {
  check_vertex(l);
  if (l.side != Side::line) throw Error(ErrorCode::invalid_argument, "expected a line");
  const Field& f = field();
  std::vector<Vertex> out;
  out.reserve(q());
  for (std::uint64_t i = 0; i < q(); ++i) {
    Vertex p{Side::point, {}};
    p.coords.reserve(m() + 1);
    const FieldElement p1 = f.element(i);
    p.coords.push_back(p1);
    for (unsigned k = 2; k <= m() + 1; ++k) {
      p.coords.push_back(f.sub(f.mul(family_.f(k, p1), l.coords[0]), l.coords[k - 1]));
    }
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<Vertex> Graph::neighbors(const Vertex& v) const {
  return v.side == Side::point ? neighbors_of_point(v) : neighbors_of_line(v);
}

VertexId Graph::encode(const Vertex& v) const {
  check_vertex(v);
  VertexId id = 0;
  for (unsigned j = m() + 1; j-- > 0;) id = id * q() + field().index(v.coords[j]);
  return v.side == Side::line ? id + side_size_ : id;
}

Vertex Graph::decode(VertexId id) const {
  if (id >= vertex_count()) throw Error(ErrorCode::out_of_range, "vertex id " + std::to_string(id) + " out of range");
  Vertex v{id >= side_size_ ? Side::line : Side::point, {}};
  id %= side_size_;
  v.coords.reserve(m() + 1);
  for (unsigned j = 0; j <= m(); ++j) {
    v.coords.push_back(field().element(id % q()));
    id /= q();
  }
  return v;
}

std::shared_ptr<const Adjacency> Graph::adjacency() const {
  if (adjacency_) return adjacency_;
  return std::make_shared<const Adjacency>(materialize(*this));
}

Adjacency materialize(const Graph& g) {
  check_budget(g);
  if (g.vertex_count() > std::numeric_limits<std::uint32_t>::max()) {
    throw Error(ErrorCode::budget_exceeded, "vertex ids exceed 32 bits");
  }
  const auto n = static_cast<std::int64_t>(g.vertex_count());
  const std::uint64_t deg = g.degree();
  Adjacency adj;
  adj.offsets.resize(static_cast<std::size_t>(n) + 1);
  for (std::int64_t v = 0; v <= n; ++v) adj.offsets[v] = static_cast<std::uint64_t>(v) * deg;
  adj.targets.resize(static_cast<std::size_t>(n) * deg);

#pragma omp parallel for schedule(static)
  for (std::int64_t v = 0; v < n; ++v) {
    const Vertex x = g.decode(static_cast<VertexId>(v));
    const auto nbrs = g.neighbors(x);
    auto* out = adj.targets.data() + adj.offsets[v];
    for (std::size_t i = 0; i < nbrs.size(); ++i) out[i] = static_cast<std::uint32_t>(g.encode(nbrs[i]));
    std::sort(out, out + nbrs.size());
  }
  return adj;
}

CayleySet cayley_generators(const Family& family) {
  const Field& f = family.field();
  const std::uint64_t q = family.q();
  std::vector<std::pair<std::vector<std::uint64_t>, std::vector<FieldElement>>> keyed;
  for (std::uint64_t ui = 0; ui < q; ++ui) {
    const FieldElement u = f.element(ui);
    std::vector<FieldElement> fu;
    for (unsigned k = 2; k <= family.m() + 1; ++k) fu.push_back(family.f(k, u));
    for (std::uint64_t ti = 1; ti < q; ++ti) {
      const FieldElement t = f.element(ti);
      std::vector<FieldElement> s{t};
      for (const auto& v : fu) s.push_back(f.mul(t, v));
      std::vector<std::uint64_t> key;
      for (auto it = s.rbegin(); it != s.rend(); ++it) key.push_back(f.index(*it));
      keyed.emplace_back(std::move(key), std::move(s));
    }
  }
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  keyed.erase(std::unique(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first == b.first; }),
              keyed.end());
  CayleySet out;
  out.elements.reserve(keyed.size());
  for (auto& [key, s] : keyed) out.elements.push_back(std::move(s));
  return out;
}

nlohmann::json graph_meta(const Graph& g) {
  const Field& f = g.field();
  return {
      {"p", f.characteristic()},
      {"e", f.degree()},
      {"m", g.m()},
      {"family", std::string(to_string(g.family().kind()))},
      {"modulus", f.modulus()},
      {"vertices", g.vertex_count()},
      {"edges", g.edge_count()},
      {"regular", g.degree()},
      {"injective_theta", g.injective_theta()},
  };
}

void export_graph(const Graph& g, ExportFormat format, std::ostream& out) {
  if (format == ExportFormat::json_meta) {
    out << graph_meta(g).dump(2) << '\n';
  } else {
    check_budget(g);
    if (format == ExportFormat::dimacs) out << "p edge " << g.vertex_count() << ' ' << g.edge_count() << '\n';
    const std::uint64_t base = format == ExportFormat::dimacs ? 1 : 0;
    const char* prefix = format == ExportFormat::dimacs ? "e " : "";
    std::vector<VertexId> ids;
    // Points have the smaller ids, so every edge is emitted from its point.
    for (VertexId pid = 0; pid < g.side_size(); ++pid) {
      ids.clear();
      for (const auto& l : g.neighbors_of_point(g.decode(pid))) ids.push_back(g.encode(l));
      std::sort(ids.begin(), ids.end());
      for (VertexId lid : ids) out << prefix << pid + base << ' ' << lid + base << '\n';
    }
  }
  if (!out) throw Error(ErrorCode::io_error, "failed writing graph export");
}

}  // namespace wenger

#include "wenger/metrics.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <unordered_map>

#include "wenger/error.hpp"
#include "wenger/kernels.hpp"
#include "wenger/linalg.hpp"
#include "wenger/spectrum.hpp"

namespace wenger {

namespace {

constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();

void require_linearized(const Graph& g, const char* what) {
  if (g.family().kind() != FamilyKind::linearized) {
    throw Error(ErrorCode::unsupported_family, std::string(what) + " requires the linearized family");
  }
}

// Coordinatewise a + s * col.
Vertex shifted(const Field& f, const Vertex& a, const FieldElement& s, const std::vector<FieldElement>& col) {
  Vertex out = a;
  for (std::size_t k = 0; k < col.size(); ++k) out.coords[k] = f.add(out.coords[k], f.mul(s, col[k]));
  return out;
}

// (1, f_2(x), ..., f_{m+1}(x)).
std::vector<FieldElement> moore_column(const Graph& g, const FieldElement& x) {
  std::vector<FieldElement> col{g.field().one()};
  for (unsigned k = 2; k <= g.m() + 1; ++k) col.push_back(g.family().f(k, x));
  return col;
}

// The point with first coordinate x adjacent to line l.
Vertex point_on_line(const Graph& g, const Vertex& l, const FieldElement& x) {
  const Field& f = g.field();
  Vertex p{Side::point, {x}};
  for (unsigned k = 2; k <= g.m() + 1; ++k) p.coords.push_back(f.sub(f.mul(g.family().f(k, x), l.coords[0]), l.coords[k - 1]));
  return p;
}

// The line with first coordinate l1 adjacent to point p.
Vertex line_through_point(const Graph& g, const Vertex& p, const FieldElement& l1) {
  const Field& f = g.field();
  Vertex l{Side::line, {l1}};
  for (unsigned k = 2; k <= g.m() + 1; ++k) l.coords.push_back(f.sub(f.mul(g.family().f(k, p.coords[0]), l1), p.coords[k - 1]));
  return l;
}

// Cuts every closed sub-walk so no vertex repeats; keeps both endpoints.
std::vector<Vertex> loop_erase(const Graph& g, const std::vector<Vertex>& walk) {
  std::vector<Vertex> path;
  std::unordered_map<VertexId, std::size_t> position;
  for (const auto& v : walk) {
    const VertexId id = g.encode(v);
    if (auto it = position.find(id); it != position.end()) {
      for (std::size_t i = it->second + 1; i < path.size(); ++i) position.erase(g.encode(path[i]));
      path.resize(it->second + 1);
      continue;
    }
    position.emplace(id, path.size());
    path.push_back(v);
  }
  return path;
}

// Walk L_start P_1 L_2 ... P_{m+1} L_end with anchors x_1, x_1 + t, x_1 + t^2 ...
PathWitness line_to_line(const Graph& g, const Vertex& start, const Vertex& end, const FieldElement& x1) {
  const Field& f = g.field();
  const unsigned n = g.m() + 1;
  std::vector<FieldElement> anchors{x1};
  for (unsigned i = 1; i < n; ++i) anchors.push_back(f.add(x1, f.basis(i - 1)));

  std::vector<std::vector<FieldElement>> cols;
  for (const auto& x : anchors) cols.push_back(moore_column(g, x));
  std::vector<std::vector<FieldElement>> a(n, std::vector<FieldElement>(n));
  for (unsigned r = 0; r < n; ++r) {
    for (unsigned c = 0; c < n; ++c) a[r][c] = cols[c][r];
  }
  std::vector<FieldElement> rhs;
  for (unsigned r = 0; r < n; ++r) rhs.push_back(f.sub(end.coords[r], start.coords[r]));
  auto t = fq_solve_unique(f, std::move(a), std::move(rhs));
  if (!t) throw Error(ErrorCode::solve_failed, "Moore system is singular for independent anchors");

  PathWitness w;
  w.coefficients = *t;
  w.anchors = anchors;
  Vertex cur = start;
  w.vertices.push_back(cur);
  for (unsigned i = 0; i < n; ++i) {
    w.vertices.push_back(point_on_line(g, cur, anchors[i]));
    cur = shifted(f, cur, (*t)[i], cols[i]);
    w.vertices.push_back(cur);
  }
  return w;
}

PathWitness point_to_point(const Graph& g, const Vertex& start, const Vertex& end) {
  const Field& f = g.field();
  const unsigned m = g.m();
  // Steps d_i = t^{i-1} in the first coordinate, unknown line coordinates c_i.
  std::vector<FieldElement> steps;
  for (unsigned i = 0; i < m; ++i) steps.push_back(f.basis(i));
  std::vector<std::vector<FieldElement>> a(m, std::vector<FieldElement>(m));
  for (unsigned r = 0; r < m; ++r) {
    for (unsigned c = 0; c < m; ++c) a[r][c] = g.family().f(r + 2, steps[c]);
  }
  std::vector<FieldElement> rhs;
  for (unsigned r = 0; r < m; ++r) rhs.push_back(f.sub(end.coords[r + 1], start.coords[r + 1]));
  auto c = fq_solve_unique(f, std::move(a), std::move(rhs));
  if (!c) throw Error(ErrorCode::solve_failed, "Moore system is singular for independent steps");

  PathWitness w;
  w.coefficients = *c;
  w.coefficients.push_back(f.zero());
  Vertex cur = start;
  w.vertices.push_back(cur);
  w.anchors.push_back(cur.coords[0]);
  for (unsigned i = 0; i <= m; ++i) {
    const Vertex l = line_through_point(g, cur, w.coefficients[i]);
    const FieldElement next_x = i < m ? f.add(cur.coords[0], steps[i]) : end.coords[0];
    cur = point_on_line(g, l, next_x);
    w.vertices.push_back(l);
    w.vertices.push_back(cur);
    w.anchors.push_back(next_x);
  }
  return w;
}

bool same_vertex_list_distinct(const Graph& g, const std::vector<Vertex>& vs) {
  std::vector<VertexId> ids;
  for (const auto& v : vs) ids.push_back(g.encode(v));
  std::sort(ids.begin(), ids.end());
  return std::adjacent_find(ids.begin(), ids.end()) == ids.end();
}

}  // namespace

ComponentsResult components(const Adjacency& adj) {
  const std::size_t n = adj.vertex_count();
  ComponentsResult r;
  r.label.assign(n, kNone);
  std::vector<std::uint32_t> queue;
  queue.reserve(n);
  for (std::size_t s = 0; s < n; ++s) {
    if (r.label[s] != kNone) continue;
    const auto id = static_cast<std::uint32_t>(r.count);
    queue.assign(1, static_cast<std::uint32_t>(s));
    r.label[s] = id;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (std::uint32_t w : adj.neighbors(queue[head])) {
        if (r.label[w] == kNone) {
          r.label[w] = id;
          queue.push_back(w);
        }
      }
    }
    r.sizes.push_back(queue.size());
    ++r.count;
  }
  return r;
}

ComponentsResult components(const Graph& g) { return components(*g.adjacency()); }

DiameterResult diameter(const Adjacency& adj) {
  const ComponentsResult comp = components(adj);
  const auto ecc = parallel::eccentricities(adj);
  DiameterResult r;
  r.per_component.assign(comp.count, 0);
  for (std::size_t v = 0; v < ecc.size(); ++v) {
    auto& d = r.per_component[comp.label[v]];
    d = std::max(d, ecc[v]);
  }
  for (auto d : r.per_component) r.diameter = std::max(r.diameter, d);
  return r;
}

DiameterResult diameter(const Graph& g) { return diameter(*g.adjacency()); }

std::uint32_t girth(const Adjacency& adj) {
  const std::uint32_t gth = parallel::girth(adj);
  if (gth == 0) throw Error(ErrorCode::acyclic, "graph has no cycle");
  return gth;
}

std::uint32_t girth(const Graph& g) { return girth(*g.adjacency()); }

std::optional<Vertex> common_neighbor(const Graph& g, const Vertex& p, const Vertex& p2) {
  require_linearized(g, "common_neighbor");
  if (p.side != Side::point || p2.side != Side::point) throw Error(ErrorCode::invalid_argument, "expected two points");
  if (g.encode(p) == g.encode(p2)) throw Error(ErrorCode::same_point, "common_neighbor needs distinct points");
  const Field& f = g.field();
  const FieldElement u = f.sub(p.coords[0], p2.coords[0]);
  if (u.is_zero()) return std::nullopt;
  const FieldElement l = f.div(f.sub(p.coords[1], p2.coords[1]), u);
  for (unsigned k = 3; k <= g.m() + 1; ++k) {
    const FieldElement diff = f.sub(p.coords[k - 1], p2.coords[k - 1]);
    if (!(diff == f.mul(l, g.family().f(k, u)))) return std::nullopt;
  }
  return line_through_point(g, p, l);
}

PathWitness diameter_witness(const Graph& g, const Vertex& a, const Vertex& b) {
  require_linearized(g, "diameter_witness");
  if (g.m() > g.field().degree()) {
    throw Error(ErrorCode::unsupported_regime, "diameter witness needs m <= e (independent anchors do not exist)");
  }
  if (g.encode(a) == g.encode(b)) return PathWitness{{a}, {}, {}};

  PathWitness w;
  if (a.side == Side::line && b.side == Side::line) {
    w = line_to_line(g, a, b, g.field().zero());
  } else if (a.side == Side::point && b.side == Side::point) {
    w = point_to_point(g, a, b);
  } else {
    const Vertex& pt = a.side == Side::point ? a : b;
    const Vertex& ln = a.side == Side::point ? b : a;
    // Start from the line through P with l_1 = 0 and pin x_1 = p_1, so the
    // first point of the walk is P itself; then drop that leading line.
    w = line_to_line(g, line_through_point(g, pt, g.field().zero()), ln, pt.coords[0]);
    w.vertices.erase(w.vertices.begin());
    if (a.side == Side::line) std::reverse(w.vertices.begin(), w.vertices.end());
  }
  w.vertices = loop_erase(g, w.vertices);

  if (!is_valid_path(g, w, a, b) || w.length() > 2 * (g.m() + 1)) {
    throw Error(ErrorCode::solve_failed, "constructed diameter path failed validation");
  }
  return w;
}

bool is_valid_path(const Graph& g, const PathWitness& w, const Vertex& a, const Vertex& b) {
  if (w.vertices.empty() || !(w.vertices.front() == a) || !(w.vertices.back() == b)) return false;
  for (std::size_t i = 0; i + 1 < w.vertices.size(); ++i) {
    if (!g.adjacent(w.vertices[i], w.vertices[i + 1])) return false;
  }
  return same_vertex_list_distinct(g, w.vertices);
}

CycleWitness cycle_witness_6(const Graph& g) {
  require_linearized(g, "cycle_witness_6");
  const Field& f = g.field();
  const Fp p = f.characteristic();
  const unsigned e = f.degree();
  const unsigned m = g.m();
  CycleWitness w;

  if (p % 2 == 1) {
    auto fill = [&](Side side, std::int64_t first, std::int64_t rest) {
      Vertex v{side, {}};
      const auto pp = static_cast<std::int64_t>(p);
      v.coords.push_back(f.from_fp(static_cast<std::uint64_t>((first % pp + pp) % pp)));
      for (unsigned k = 1; k <= m; ++k) v.coords.push_back(f.from_fp(static_cast<std::uint64_t>((rest % pp + pp) % pp)));
      return v;
    };
    w.points = {fill(Side::point, 0, 0), fill(Side::point, -1, -1), fill(Side::point, -2, 0)};
    w.lines = {fill(Side::line, 1, 0), fill(Side::line, -1, 2), fill(Side::line, 0, 0)};
    w.u = {f.one(), f.one(), f.neg(f.from_fp(2))};
    w.c = {f.one(), f.neg(f.one()), f.zero()};
    return w;
  }
  if (e < 2 || m != 1) {
    throw Error(ErrorCode::no_six_cycle, "no 6-cycle exists for p = 2 with e = m = 1 or m >= 2 (girth is 8)");
  }

  // beta != 0 with tr(beta) = 0, then alpha with alpha^2 + alpha = beta.
  for (std::uint64_t bi = 1; bi < f.order(); ++bi) {
    const FieldElement beta = f.element(bi);
    if (f.trace(beta) != 0) continue;
    for (std::uint64_t ai = 1; ai < f.order(); ++ai) {
      const FieldElement alpha = f.element(ai);
      const FieldElement alpha2 = f.mul(alpha, alpha);
      if (!(f.add(alpha2, alpha) == beta)) continue;
      const FieldElement c2 = f.div(beta, alpha);
      w.points = {Vertex{Side::point, {f.zero(), f.zero()}}, Vertex{Side::point, {alpha2, f.zero()}},
                  Vertex{Side::point, {beta, beta}}};
      w.lines = {Vertex{Side::line, {f.zero(), f.zero()}}, Vertex{Side::line, {c2, f.mul(alpha, beta)}},
                 Vertex{Side::line, {f.one(), f.zero()}}};
      w.u = {alpha2, alpha, beta};
      w.c = {f.zero(), c2, f.one()};
      return w;
    }
  }
  throw Error(ErrorCode::solve_failed, "no alpha with alpha^2 + alpha = beta found");
}

CycleWitness cycle_witness_8(const Graph& g) {
  require_linearized(g, "cycle_witness_8");
  const Field& f = g.field();
  const unsigned m = g.m();
  if (f.characteristic() != 2 || !((f.degree() == 1 && m == 1) || m >= 2)) {
    throw Error(ErrorCode::unsupported_regime, "8-cycle witness needs p = 2 with e = m = 1 or m >= 2");
  }
  auto bits = [&](Side side, unsigned first, unsigned rest) {
    Vertex v{side, {f.from_fp(first)}};
    for (unsigned k = 1; k <= m; ++k) v.coords.push_back(f.from_fp(rest));
    return v;
  };
  CycleWitness w;
  w.points = {bits(Side::point, 0, 0), bits(Side::point, 1, 0), bits(Side::point, 0, 1), bits(Side::point, 1, 1)};
  w.lines = {bits(Side::line, 0, 0), bits(Side::line, 1, 1), bits(Side::line, 0, 1), bits(Side::line, 1, 0)};
  w.u = {f.one(), f.one(), f.one(), f.one()};
  w.c = {f.zero(), f.one(), f.zero(), f.one()};
  return w;
}

bool verify_cycle_system(const Graph& g, const CycleWitness& w) {
  require_linearized(g, "verify_cycle_system");
  const Field& f = g.field();
  if (w.u.empty() || w.u.size() != w.c.size()) return false;
  FieldElement sum = f.zero();
  for (const auto& u : w.u) {
    if (u.is_zero()) return false;
    sum = f.add(sum, u);
  }
  if (!sum.is_zero()) return false;
  for (unsigned k = 2; k <= g.m() + 1; ++k) {
    FieldElement acc = f.zero();
    for (std::size_t i = 0; i < w.u.size(); ++i) acc = f.add(acc, f.mul(w.c[i], g.family().f(k, w.u[i])));
    if (!acc.is_zero()) return false;
  }
  return true;
}

bool is_valid_cycle(const Graph& g, const CycleWitness& w) {
  const std::size_t t = w.points.size();
  if (t < 2 || w.lines.size() != t) return false;
  for (std::size_t i = 0; i < t; ++i) {
    if (w.points[i].side != Side::point || w.lines[i].side != Side::line) return false;
    if (!g.adjacent(w.points[i], w.lines[i]) || !g.adjacent(w.lines[i], w.points[(i + 1) % t])) return false;
  }
  return same_vertex_list_distinct(g, w.points) && same_vertex_list_distinct(g, w.lines);
}

std::vector<VertexId> cycle_ids(const Graph& g, const CycleWitness& w) {
  std::vector<VertexId> ids;
  for (std::size_t i = 0; i < w.points.size() && i < w.lines.size(); ++i) {
    ids.push_back(g.encode(w.points[i]));
    ids.push_back(g.encode(w.lines[i]));
  }
  return ids;
}

std::vector<VertexId> path_ids(const Graph& g, const PathWitness& w) {
  std::vector<VertexId> ids;
  for (const auto& v : w.vertices) ids.push_back(g.encode(v));
  return ids;
}

MetricsPrediction predict_metrics(const Family& family) {
  MetricsPrediction pred;
  if (family.theta_injective()) {
    pred.components = static_cast<std::uint64_t>(component_count_formula(family));
  }
  if (family.kind() != FamilyKind::linearized) return pred;
  const Fp p = family.field().characteristic();
  const unsigned e = family.field().degree();
  const unsigned m = family.m();
  if (m <= e) pred.diameter = 2 * (m + 1);
  if (p % 2 == 1 || (e >= 2 && m == 1)) {
    pred.girth = 6;
  } else {
    pred.girth = 8;
  }
  return pred;
}

std::optional<bool> MetricsReport::components_match() const {
  if (!predicted.components) return std::nullopt;
  return *predicted.components == components;
}

std::optional<bool> MetricsReport::diameter_match() const {
  if (!predicted.diameter) return std::nullopt;
  return *predicted.diameter == diameter;
}

std::optional<bool> MetricsReport::girth_match() const {
  if (!predicted.girth) return std::nullopt;
  return *predicted.girth == girth;
}

bool MetricsReport::all_match() const {
  return components_match().value_or(true) && diameter_match().value_or(true) && girth_match().value_or(true);
}

MetricsReport compute_metrics(const Graph& g, const Adjacency& adj) {
  MetricsReport r;
  const ComponentsResult comp = components(adj);
  r.components = comp.count;
  r.sizes = comp.sizes;
  const DiameterResult d = diameter(adj);
  r.diameter = d.diameter;
  r.component_diameters = d.per_component;
  r.girth = girth(adj);
  r.predicted = predict_metrics(g.family());
  return r;
}

MetricsReport compute_metrics(const Graph& g) { return compute_metrics(g, *g.adjacency()); }

namespace {

template <typename T>
nlohmann::json opt_json(const std::optional<T>& v) {
  return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

template <typename T>
std::optional<T> opt_from(const nlohmann::json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<T>();
}

}  // namespace

nlohmann::json to_json(const MetricsReport& r) {
  return {
      {"components", r.components},
      {"sizes", r.sizes},
      {"diameter", r.diameter},
      {"component_diameters", r.component_diameters},
      {"girth", r.girth},
      {"predicted",
       {{"components", opt_json(r.predicted.components)},
        {"diameter", opt_json(r.predicted.diameter)},
        {"girth", opt_json(r.predicted.girth)}}},
      {"match",
       {{"components", opt_json(r.components_match())},
        {"diameter", opt_json(r.diameter_match())},
        {"girth", opt_json(r.girth_match())}}},
  };
}

MetricsReport metrics_report_from_json(const nlohmann::json& j) {
  MetricsReport r;
  r.components = j.at("components").get<std::uint64_t>();
  r.sizes = j.at("sizes").get<std::vector<std::uint64_t>>();
  r.diameter = j.at("diameter").get<std::uint32_t>();
  if (j.contains("component_diameters")) r.component_diameters = j.at("component_diameters").get<std::vector<std::uint32_t>>();
  r.girth = j.at("girth").get<std::uint32_t>();
  const auto& pred = j.at("predicted");
  r.predicted.components = opt_from<std::uint64_t>(pred, "components");
  r.predicted.diameter = opt_from<std::uint32_t>(pred, "diameter");
  r.predicted.girth = opt_from<std::uint32_t>(pred, "girth");
  return r;
}

}  // namespace wenger

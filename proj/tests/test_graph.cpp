#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "wenger/error.hpp"
#include "wenger/graph.hpp"

using namespace wenger;

namespace {

std::vector<VertexId> ids_of(const Graph& g, const std::vector<Vertex>& vs) {
  std::vector<VertexId> out;
  for (const auto& v : vs) out.push_back(g.encode(v));
  return out;
}

// Vertex id from the definition: side offset plus base-q digits, each digit
// the coordinate vector read as a base-p number.
VertexId reference_id(const Graph& g, const Vertex& v) {
  const Fp p = g.field().characteristic();
  VertexId id = 0;
  VertexId place = 1;
  for (const auto& x : v.coords) {
    std::uint64_t digit = 0;
    std::uint64_t weight = 1;
    for (auto c : x.coeffs()) {
      digit += c * weight;
      weight *= p;
    }
    id += digit * place;
    place *= g.q();
  }
  return v.side == Side::line ? id + place : id;
}

std::vector<FamilySpec> small_specs() {
  std::vector<FamilySpec> out;
  for (const auto& [p, e] : std::vector<std::pair<Fp, unsigned>>{{2, 1}, {3, 1}, {2, 2}, {5, 1}}) {
    for (unsigned m = 1; m <= 2; ++m) {
      out.push_back(FamilySpec::linearized(p, e, m));
      out.push_back(FamilySpec::wenger(p, e, m));
    }
  }
  return out;
}

}  // namespace

TEST_CASE("counts") {
  const Graph l12(FamilySpec::linearized(2, 1, 1));
  CHECK(l12.vertex_count() == 8);
  CHECK(l12.edge_count() == 8);
  CHECK(l12.degree() == 2);

  const Graph w13(FamilySpec::wenger(3, 1, 1));
  CHECK(w13.vertex_count() == 18);
  CHECK(w13.edge_count() == 27);
}

TEST_CASE("neighbor examples") {
  const Graph g(FamilySpec::linearized(2, 1, 1));
  CHECK(g.neighbors_of_point(g.vertex_fp(Side::point, {0, 0})) ==
        std::vector<Vertex>{g.vertex_fp(Side::line, {0, 0}), g.vertex_fp(Side::line, {1, 0})});
  CHECK(g.neighbors_of_line(g.vertex_fp(Side::line, {0, 0})) ==
        std::vector<Vertex>{g.vertex_fp(Side::point, {0, 0}), g.vertex_fp(Side::point, {1, 0})});

  const Graph g11(FamilySpec::linearized(11, 1, 1));
  const auto nbrs = g11.neighbors_of_point(g11.vertex_fp(Side::point, {0, 0}));
  CHECK(std::find(nbrs.begin(), nbrs.end(), g11.vertex_fp(Side::line, {1, 0})) != nbrs.end());
  const Vertex l = g11.vertex_fp(Side::line, {1, 0});
  CHECK(g11.adjacent(l, g11.vertex_fp(Side::point, {0, 0})));
  CHECK(g11.adjacent(l, g11.vertex_fp(Side::point, {-1, -1})));
  CHECK_FALSE(g11.adjacent(l, g11.vertex_fp(Side::line, {0, 0})));
}

TEST_CASE("adjacency definition, symmetry and regularity") {
  for (const auto& spec : small_specs()) {
    const Graph g(spec);
    const Field& f = g.field();
    CAPTURE(g.q());
    CAPTURE(g.m());
    for (VertexId pid = 0; pid < g.side_size(); ++pid) {
      const Vertex p = g.decode(pid);
      const auto lines = g.neighbors_of_point(p);
      REQUIRE(lines.size() == g.q());
      for (std::uint64_t i = 0; i < g.q(); ++i) CHECK(lines[i].coords[0] == f.element(i));
      std::set<VertexId> distinct;
      for (const auto& l : lines) {
        distinct.insert(g.encode(l));
        // l_k + p_k = f_k(p_1) l_1, checked with pow rather than the family.
        for (unsigned k = 2; k <= g.m() + 1; ++k) {
          const std::uint64_t exp = spec.kind == FamilyKind::wenger ? k - 1 : static_cast<std::uint64_t>(std::pow(spec.p, k - 2));
          CHECK(f.add(l.coords[k - 1], p.coords[k - 1]) == f.mul(f.pow(p.coords[0], exp), l.coords[0]));
        }
        const auto back = g.neighbors_of_line(l);
        CHECK(std::find(back.begin(), back.end(), p) != back.end());
      }
      CHECK(distinct.size() == g.q());
    }
    for (VertexId lid = g.side_size(); lid < g.vertex_count(); ++lid) CHECK(g.neighbors(g.decode(lid)).size() == g.q());
  }
}

TEST_CASE("materialized adjacency matches lazy neighbors") {
  for (const auto& spec : small_specs()) {
    const Graph g(spec, BuildMode::materialized);
    REQUIRE(g.is_materialized());
    const auto adj = g.adjacency();
    CHECK(adj->vertex_count() == g.vertex_count());
    CHECK(adj->edge_count() == g.edge_count());
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      auto lazy = ids_of(g, g.neighbors(g.decode(v)));
      std::sort(lazy.begin(), lazy.end());
      const auto stored = adj->neighbors(v);
      CHECK(std::vector<VertexId>(stored.begin(), stored.end()) == lazy);
    }
  }
}

TEST_CASE("encode and decode") {
  for (const auto& [p, e] : std::vector<std::pair<Fp, unsigned>>{{2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}, {2, 3}, {3, 2}}) {
    for (unsigned m = 1; m <= 2; ++m) {
      const Graph g(FamilySpec::linearized(p, e, m));
      const std::vector<FieldElement> zeros(m + 1, g.field().zero());
      CHECK(g.encode(g.point(zeros)) == 0);
      CHECK(g.encode(g.line(zeros)) == g.side_size());
      for (VertexId id = 0; id < g.vertex_count(); ++id) {
        const Vertex v = g.decode(id);
        CHECK(g.encode(v) == id);
        CHECK(reference_id(g, v) == id);
      }
      try {
        (void)g.decode(g.vertex_count());
        FAIL("decode past the end");
      } catch (const Error& err) {
        CHECK(err.code() == ErrorCode::out_of_range);
      }
    }
  }
}

TEST_CASE("vertex validation") {
  const Graph g(FamilySpec::linearized(3, 1, 2));
  const Field other(5, 1);
  CHECK_THROWS_AS(g.point({g.field().zero()}), Error);
  CHECK_THROWS_AS(g.point({other.zero(), other.zero(), other.zero()}), Error);
}

TEST_CASE("custom family and injectivity flag") {
  // f_2 = x over GF(3): injective.
  FamilySpec ok{3, 1, std::nullopt, 1, FamilyKind::custom, parse_f_list("0,1", 3, 1)};
  const Graph g(ok);
  CHECK(g.injective_theta());
  const Graph w(FamilySpec::wenger(3, 1, 1));
  for (VertexId id = 0; id < g.side_size(); ++id) {
    CHECK(ids_of(g, g.neighbors(g.decode(id))) == ids_of(w, w.neighbors(w.decode(id))));
  }

  // f_2 = f_3 = x^2 over GF(3) sends u and -u to the same tuple.
  FamilySpec bad{3, 1, std::nullopt, 2, FamilyKind::custom, parse_f_list("0,0,1;0,0,1", 3, 1)};
  const Graph h(bad);
  CHECK_FALSE(h.injective_theta());
  CHECK(h.vertex_count() == 54);
  CHECK(graph_meta(h)["injective_theta"] == false);

  // Digits are base-p numerals for the canonical index: "10" over GF(4) is t.
  const auto f = parse_f_list("10,1", 2, 2);
  CHECK(f == std::vector<std::vector<std::uint64_t>>{{2, 1}});
  CHECK_THROWS_AS(parse_f_list("0,2", 2, 1), Error);
  CHECK_THROWS_AS(parse_f_list("0,,1", 3, 1), Error);
  CHECK_THROWS_AS(Family(FamilySpec{3, 1, std::nullopt, 2, FamilyKind::custom, parse_f_list("0,1", 3, 1)}), Error);
}

TEST_CASE("modulus parsing") {
  CHECK(parse_modulus("1,1,1") == std::vector<Fp>{1, 1, 1});
  CHECK_THROWS_AS(parse_modulus("1,x"), Error);
  CHECK_THROWS_AS(parse_modulus("1,,1"), Error);
  const Graph g(FamilySpec{2, 2, parse_modulus("1,1,1"), 1, FamilyKind::linearized, {}});
  CHECK(g.field().modulus() == std::vector<Fp>{1, 1, 1});
}

TEST_CASE("Cayley generators") {
  const Family l12(FamilySpec::linearized(2, 1, 1));
  const CayleySet s = cayley_generators(l12);
  const Field& f = l12.field();
  REQUIRE(s.size() == 2);
  CHECK(s.elements[0] == std::vector<FieldElement>{f.one(), f.zero()});
  CHECK(s.elements[1] == std::vector<FieldElement>{f.one(), f.one()});

  for (const auto& spec : small_specs()) {
    const Family fam(spec);
    const CayleySet set = cayley_generators(fam);
    const Field& h = fam.field();
    CHECK(set.size() == fam.q() * (fam.q() - 1));
    for (const auto& x : set.elements) {
      CHECK_FALSE(x[0].is_zero());
      std::vector<FieldElement> neg;
      for (const auto& c : x) neg.push_back(h.neg(c));
      CHECK(std::find(set.elements.begin(), set.elements.end(), neg) != set.elements.end());
    }
  }

  FamilySpec bad{3, 1, std::nullopt, 2, FamilyKind::custom, parse_f_list("0,0,1;0,0,1", 3, 1)};
  CHECK(cayley_generators(Family(bad)).size() < 6);
}

TEST_CASE("two-step line neighborhoods match NN^T = B + qI") {
  for (const auto& spec : small_specs()) {
    const Graph g(spec);
    if (g.q() > 4) continue;
    const Field& f = g.field();
    const CayleySet s = cayley_generators(g.family());
    for (VertexId lid = g.side_size(); lid < g.vertex_count(); ++lid) {
      const Vertex l = g.decode(lid);
      std::vector<VertexId> two_step;
      for (const auto& p : g.neighbors_of_line(l)) {
        for (const auto& l2 : g.neighbors_of_point(p)) two_step.push_back(g.encode(l2));
      }
      std::vector<VertexId> expected(g.q(), lid);
      for (const auto& gen : s.elements) {
        Vertex shifted = l;
        for (std::size_t k = 0; k < gen.size(); ++k) shifted.coords[k] = f.add(shifted.coords[k], gen[k]);
        expected.push_back(g.encode(shifted));
      }
      std::sort(two_step.begin(), two_step.end());
      std::sort(expected.begin(), expected.end());
      CHECK(two_step == expected);
    }
  }
}

TEST_CASE("export formats") {
  const Graph l12(FamilySpec::linearized(2, 1, 1));
  std::ostringstream edges;
  export_graph(l12, ExportFormat::edgelist, edges);
  std::vector<std::pair<VertexId, VertexId>> parsed;
  std::istringstream in(edges.str());
  VertexId u = 0;
  VertexId v = 0;
  while (in >> u >> v) parsed.emplace_back(u, v);
  CHECK(parsed.size() == 8);
  CHECK(std::is_sorted(parsed.begin(), parsed.end()));
  for (const auto& [a, b] : parsed) {
    CHECK(a < b);
    CHECK(l12.adjacent(l12.decode(a), l12.decode(b)));
  }
  CHECK(edges.str().back() == '\n');

  const Graph l13(FamilySpec::linearized(3, 1, 1));
  std::ostringstream dimacs;
  export_graph(l13, ExportFormat::dimacs, dimacs);
  std::istringstream din(dimacs.str());
  std::string header;
  std::getline(din, header);
  CHECK(header == "p edge 18 27");
  std::string line;
  int count = 0;
  while (std::getline(din, line)) {
    CHECK(line.rfind("e ", 0) == 0);
    ++count;
  }
  CHECK(count == 27);
  CHECK(dimacs.str().find("e 0 ") == std::string::npos);

  for (const auto& spec : small_specs()) {
    const Graph g(spec);
    std::ostringstream meta;
    export_graph(g, ExportFormat::json_meta, meta);
    const auto j = nlohmann::json::parse(meta.str());
    CHECK(j["regular"] == g.q());
    CHECK(j["vertices"] == g.vertex_count());
    CHECK(j["edges"] == g.edge_count());
    CHECK(j["family"] == std::string(to_string(spec.kind)));
    CHECK(j["modulus"] == g.field().modulus());
    CHECK(j["injective_theta"] == true);
  }
}

TEST_CASE("vertex budget") {
  try {
    Graph g(FamilySpec::linearized(3, 1, 2), BuildMode::materialized, 10);
    FAIL("budget ignored");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::budget_exceeded);
  }
  const Graph lazy(FamilySpec::linearized(3, 1, 2), BuildMode::lazy, 10);
  CHECK_FALSE(lazy.is_materialized());
  std::ostringstream os;
  CHECK_THROWS_AS(export_graph(lazy, ExportFormat::edgelist, os), Error);
  CHECK_NOTHROW(export_graph(lazy, ExportFormat::json_meta, os));
}

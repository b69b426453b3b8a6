#include "wenger/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <random>
#include <set>
#include <sstream>

#include "wenger/error.hpp"
#include "wenger/linalg.hpp"
#include "wenger/linearized.hpp"
#include "wenger/metrics.hpp"
#include "wenger/spectrum.hpp"

namespace wenger {

std::string_view to_string(Status s) {
  switch (s) {
    case Status::pass: return "PASS";
    case Status::fail: return "FAIL";
    case Status::skip: return "SKIP";
  }
  return "?";
}

namespace {

struct Case {
  Fp p;
  unsigned e;
  unsigned m;
  FamilyKind kind = FamilyKind::linearized;

  FamilySpec spec() const { return {p, e, std::nullopt, m, kind, {}}; }
  std::uint64_t q() const { return static_cast<std::uint64_t>(big_pow(p, e)); }
  std::uint64_t vertices() const { return static_cast<std::uint64_t>(2 * big_pow(q(), m + 1)); }
  std::string name() const {
    const char* prefix = kind == FamilyKind::wenger ? "W_" : "L_";
    return prefix + std::to_string(m) + "(" + std::to_string(q()) + ")";
  }
};

const std::vector<Case> kSpectrumCases = {{2, 1, 1}, {2, 1, 2}, {2, 1, 3}, {2, 2, 2}, {2, 2, 3}, {3, 1, 1},
                                          {3, 1, 2}, {2, 3, 3}, {3, 2, 2}, {5, 1, 1}, {7, 1, 1}};

const std::vector<Case> kDiameterCases = {{2, 1, 1}, {3, 1, 1}, {2, 2, 1}, {5, 1, 1}, {2, 3, 1},
                                          {3, 2, 1}, {2, 2, 2}, {3, 2, 2}, {2, 3, 3}};

const std::vector<Case> kGirth6Cases = {{3, 1, 1}, {5, 1, 1}, {3, 2, 1}, {3, 1, 2}, {2, 2, 1}, {2, 3, 1}};
const std::vector<Case> kGirth8Cases = {{2, 1, 1}, {2, 1, 2}, {2, 2, 2}, {2, 1, 3}};

const std::vector<Case> kWengerCases = {
    {3, 1, 1, FamilyKind::wenger}, {3, 1, 2, FamilyKind::wenger}, {2, 2, 2, FamilyKind::wenger}};

std::vector<Case> all_graph_cases() {
  std::vector<Case> out;
  auto add = [&](const std::vector<Case>& cs) {
    for (const auto& c : cs) {
      const bool seen = std::any_of(out.begin(), out.end(), [&](const Case& o) {
        return o.p == c.p && o.e == c.e && o.m == c.m && o.kind == c.kind;
      });
      if (!seen) out.push_back(c);
    }
  };
  add(kSpectrumCases);
  add(kDiameterCases);
  add(kGirth6Cases);
  add(kGirth8Cases);
  add(kWengerCases);
  return out;
}

// Pass/fail/skip counts for one criterion, plus the first few failure notes.
class Tally {
 public:
  void check(bool ok, const std::string& what) {
    if (ok) {
      ++passed_;
    } else {
      ++failed_;
      if (notes_.size() < 4) notes_.push_back(what);
    }
  }
  void skip() { ++skipped_; }

  // Runs body for a case, mapping budget errors to SKIP and anything else
  // thrown to FAIL.
  void run(const Case& c, const VerifyOptions& opts, const std::function<void()>& body) {
    if (c.vertices() > opts.max_vertices) {
      skip();
      return;
    }
    try {
      body();
    } catch (const Error& err) {
      if (err.code() == ErrorCode::budget_exceeded) {
        skip();
      } else {
        check(false, c.name() + ": " + err.what());
      }
    }
  }

  void finish(CriterionResult& r) const {
    r.status = failed_ > 0 ? Status::fail : skipped_ > 0 ? Status::skip : Status::pass;
    std::ostringstream os;
    os << passed_ << " passed, " << failed_ << " failed, " << skipped_ << " skipped";
    for (const auto& n : notes_) os << "; " << n;
    r.detail = os.str();
  }

 private:
  int passed_ = 0;
  int failed_ = 0;
  int skipped_ = 0;
  std::vector<std::string> notes_;
};

Adjacency adjacency_for(const Graph& g, const VerifyOptions& opts) {
  Adjacency adj = *g.adjacency();
  if (opts.perturb) adj = perturb_one_edge(adj, g.side_size());
  return adj;
}

Graph build(const Case& c, const VerifyOptions& opts) {
  return Graph(c.spec(), BuildMode::materialized, opts.max_vertices);
}

void criterion_spectrum(Tally& t, const VerifyOptions& opts) {
  for (const auto& c : kSpectrumCases) {
    t.run(c, opts, [&] {
      const Family family(c.spec());
      const auto hist = root_count_histogram(family);
      const auto table = closed_form_linearized(c.p, c.e, c.m);
      t.check(table_matches_histogram(table, hist), c.name() + " closed form != enumeration");
      const auto report = report_from_table(table);
      t.check(report.total == 2 * big_pow(c.q(), c.m + 1), c.name() + " multiplicities do not sum to 2q^{m+1}");
    });
  }
}

void criterion_trace(Tally& t, const VerifyOptions& opts) {
  for (const auto& c : kSpectrumCases) {
    if (c.vertices() > 20000) continue;
    t.run(c, opts, [&] {
      const Graph g = build(c, opts);
      const Adjacency adj = adjacency_for(g, opts);
      const auto hist = root_count_histogram(g.family());
      for (unsigned k = 1; k <= 3; ++k) {
        const BigInt walks = walk_trace(adj, k);
        const BigInt moment = spectral_moment(hist, c.q(), k);
        t.check(walks == moment, c.name() + " trace(A^" + std::to_string(2 * k) + ") " + to_decimal(walks) +
                                     " != " + to_decimal(moment));
      }
    });
  }
}

void criterion_regularity(Tally& t, const VerifyOptions& opts) {
  for (const auto& c : all_graph_cases()) {
    t.run(c, opts, [&] {
      const Graph g = build(c, opts);
      const Adjacency adj = adjacency_for(g, opts);
      const std::uint64_t q = c.q();
      bool regular = true;
      for (std::size_t v = 0; v < adj.vertex_count(); ++v) regular = regular && adj.neighbors(v).size() == q;
      t.check(regular, c.name() + " not " + std::to_string(q) + "-regular");
      t.check(adj.vertex_count() == 2 * big_pow(q, c.m + 1), c.name() + " |V| != 2q^{m+1}");
      t.check(adj.edge_count() == big_pow(q, c.m + 2), c.name() + " |E| != q^{m+2}");
      t.check(g.vertex_count() == adj.vertex_count() && g.edge_count() == adj.edge_count(),
              c.name() + " reported counts disagree with adjacency");
    });
  }
}

void criterion_components(Tally& t, const VerifyOptions& opts) {
  for (const auto& c : all_graph_cases()) {
    t.run(c, opts, [&] {
      const Graph g = build(c, opts);
      const Adjacency adj = adjacency_for(g, opts);
      const auto bfs = components(adj);
      const BigInt formula = component_count_formula(g.family());
      t.check(formula == bfs.count, c.name() + " components " + std::to_string(bfs.count) + " != formula " +
                                        to_decimal(formula));
      if (c.kind == FamilyKind::linearized) {
        const BigInt expected = c.m <= c.e ? BigInt(1) : big_pow(c.q(), c.m - c.e);
        t.check(expected == bfs.count, c.name() + " components " + std::to_string(bfs.count) + " != " +
                                           to_decimal(expected));
      }
    });
  }
}

void criterion_diameter(Tally& t, const VerifyOptions& opts) {
  for (const auto& c : kDiameterCases) {
    t.run(c, opts, [&] {
      const Graph g = build(c, opts);
      const Adjacency adj = adjacency_for(g, opts);
      const auto d = diameter(adj);
      t.check(d.diameter == 2 * (c.m + 1),
              c.name() + " diameter " + std::to_string(d.diameter) + " != " + std::to_string(2 * (c.m + 1)));
    });
  }
}

void criterion_girth(Tally& t, const VerifyOptions& opts) {
  auto expect = [&](const std::vector<Case>& cases, std::uint32_t want) {
    for (const auto& c : cases) {
      t.run(c, opts, [&] {
        const Graph g = build(c, opts);
        const std::uint32_t got = girth(adjacency_for(g, opts));
        t.check(got == want, c.name() + " girth " + std::to_string(got) + " != " + std::to_string(want));
      });
    }
  };
  expect(kGirth6Cases, 6);
  expect(kGirth8Cases, 8);
  for (const auto& c : all_graph_cases()) {
    if (c.kind != FamilyKind::linearized) continue;
    t.run(c, opts, [&] {
      const Graph g = build(c, opts);
      const std::uint32_t got = girth(adjacency_for(g, opts));
      t.check(got >= 6, c.name() + " girth " + std::to_string(got) + " < 6");
    });
  }
}

void criterion_witnesses(Tally& t, const VerifyOptions& opts) {
  for (const auto& c : kDiameterCases) {
    t.run(c, opts, [&] {
      const Graph g(c.spec(), BuildMode::lazy, opts.max_vertices);
      const std::size_t bound = 2 * (c.m + 1);
      std::mt19937_64 rng(opts.seed);
      std::uniform_int_distribution<VertexId> pick(0, g.vertex_count() - 1);
      int bad = 0;
      for (int i = 0; i < 1000; ++i) {
        const Vertex a = g.decode(pick(rng));
        const Vertex b = g.decode(pick(rng));
        const PathWitness w = diameter_witness(g, a, b);
        if (!is_valid_path(g, w, a, b) || w.length() > bound) ++bad;
      }
      t.check(bad == 0, c.name() + ": " + std::to_string(bad) + " invalid witness paths");

      const Vertex l = g.decode(g.side_size() + pick(rng) % g.side_size());
      Vertex l2 = l;
      l2.coords.back() = g.field().add(l2.coords.back(), g.field().one());
      const PathWitness w = diameter_witness(g, l, l2);
      t.check(is_valid_path(g, w, l, l2) && w.length() == bound,
              c.name() + " lower-bound pair path has length " + std::to_string(w.length()));
    });
  }

  auto cycles = [&](const std::vector<Case>& cases, bool six) {
    for (const auto& c : cases) {
      t.run(c, opts, [&] {
        const Graph g(c.spec(), BuildMode::lazy, opts.max_vertices);
        const CycleWitness w = six ? cycle_witness_6(g) : cycle_witness_8(g);
        t.check(w.length() == (six ? 6u : 8u), c.name() + " witness has wrong length");
        t.check(verify_cycle_system(g, w), c.name() + " cycle witness fails the difference system");
        t.check(is_valid_cycle(g, w), c.name() + " cycle witness is not a cycle");
        if (!six) {
          bool refused = false;
          try {
            (void)cycle_witness_6(g);
          } catch (const Error& err) {
            refused = err.code() == ErrorCode::no_six_cycle;
          }
          t.check(refused, c.name() + " produced a 6-cycle witness in a girth-8 regime");
        }
      });
    }
  };
  cycles(kGirth6Cases, true);
  cycles(kGirth8Cases, false);
}

std::optional<VertexId> brute_common_neighbor(const Graph& g, const Vertex& a, const Vertex& b) {
  std::set<VertexId> na;
  for (const auto& l : g.neighbors_of_point(a)) na.insert(g.encode(l));
  std::vector<VertexId> common;
  for (const auto& l : g.neighbors_of_point(b)) {
    if (na.count(g.encode(l))) common.push_back(g.encode(l));
  }
  if (common.size() > 1) throw Error(ErrorCode::invalid_argument, "two points share more than one line");
  if (common.empty()) return std::nullopt;
  return common.front();
}

void criterion_common_neighbor(Tally& t, const VerifyOptions& opts) {
  auto agree = [&](const Graph& g, const Vertex& a, const Vertex& b) {
    const auto fast = common_neighbor(g, a, b);
    const auto slow = brute_common_neighbor(g, a, b);
    if (fast.has_value() != slow.has_value()) return false;
    return !fast || g.encode(*fast) == *slow;
  };

  const std::vector<Case> small = {{2, 1, 1}, {3, 1, 1}, {2, 2, 1}, {5, 1, 1}};
  for (const auto& c : small) {
    t.run(c, opts, [&] {
      const Graph g(c.spec(), BuildMode::lazy, opts.max_vertices);
      int bad = 0;
      for (VertexId i = 0; i < g.side_size(); ++i) {
        for (VertexId j = 0; j < g.side_size(); ++j) {
          if (i != j && !agree(g, g.decode(i), g.decode(j))) ++bad;
        }
      }
      t.check(bad == 0, c.name() + ": " + std::to_string(bad) + " disagreeing pairs");
    });
  }

  const Case c11{11, 1, 1};
  t.run(c11, opts, [&] {
    const Graph g(c11.spec(), BuildMode::lazy, opts.max_vertices);
    std::mt19937_64 rng(opts.seed);
    std::uniform_int_distribution<VertexId> pick(0, g.side_size() - 1);
    int bad = 0;
    for (int n = 0; n < 10000;) {
      const VertexId i = pick(rng);
      const VertexId j = pick(rng);
      if (i == j) continue;
      if (!agree(g, g.decode(i), g.decode(j))) ++bad;
      ++n;
    }
    t.check(bad == 0, c11.name() + ": " + std::to_string(bad) + " disagreeing sampled pairs");

    const auto line = common_neighbor(g, g.vertex_fp(Side::point, {0, 0}), g.vertex_fp(Side::point, {-1, -1}));
    t.check(line && *line == g.vertex_fp(Side::line, {1, 0}), "example pair in L_1(11) did not give [1,0]");
  });
}

std::uint64_t enumerate_rank(unsigned l, unsigned n, unsigned k, Fp q) {
  std::uint64_t total = 1;
  for (unsigned i = 0; i < l * n; ++i) total *= q;
  std::uint64_t count = 0;
  for (std::uint64_t code = 0; code < total; ++code) {
    FpMatrix m(l, n, q);
    std::uint64_t x = code;
    for (unsigned r = 0; r < l; ++r) {
      for (unsigned c = 0; c < n; ++c) {
        m.set(r, c, x % q);
        x /= q;
      }
    }
    if (fp_rank_kernel(m).rank == k) ++count;
  }
  return count;
}

void criterion_rank_count(Tally& t) {
  for (Fp q : {2u, 3u}) {
    for (unsigned l = 1; l <= 3; ++l) {
      for (unsigned n = 1; n <= 3; ++n) {
        for (unsigned k = 0; k <= 3; ++k) {
          const std::uint64_t brute = enumerate_rank(l, n, k, q);
          const std::string label = "rank_count(" + std::to_string(l) + "," + std::to_string(n) + "," +
                                    std::to_string(k) + "," + std::to_string(q) + ")";
          if (k > std::min(l, n)) {
            bool refused = false;
            try {
              (void)rank_count(l, n, k, q);
            } catch (const Error& err) {
              refused = err.code() == ErrorCode::invalid_rank;
            }
            t.check(refused && brute == 0, label + " should be rejected");
          } else {
            t.check(rank_count(l, n, k, q) == brute, label + " != " + std::to_string(brute));
          }
        }
      }
    }
  }
  for (std::uint64_t q : {2u, 3u, 4u, 5u}) {
    for (unsigned l = 1; l <= 4; ++l) {
      for (unsigned n = 1; n <= 4; ++n) {
        BigInt sum = 0;
        for (unsigned k = 0; k <= std::min(l, n); ++k) sum += rank_count(l, n, k, q);
        t.check(sum == big_pow(q, l * n), "sum rule fails for l=" + std::to_string(l) + " n=" + std::to_string(n) +
                                              " q=" + std::to_string(q));
      }
    }
  }
}

void criterion_expander(Tally& t, const VerifyOptions& opts) {
  for (const auto& [p, e] : std::vector<std::pair<Fp, unsigned>>{{2, 1}, {2, 2}, {3, 1}}) {
    const Case c{p, e, e};
    t.run(c, opts, [&] {
      const auto report = spectrum_enumerate(Family(c.spec()));
      const auto rads = report.radicands();
      const ExpansionBound bound = expansion_bound(p, e);
      t.check(rads.size() >= 2 && rads[0] == bound.q * bound.q, c.name() + " largest radicand is not q^2");
      t.check(rads.size() >= 2 && rads[1] == bound.second_radicand,
              c.name() + " second radicand " + (rads.size() >= 2 ? to_decimal(rads[1]) : std::string("none")) +
                  " != q p^{e-1} = " + to_decimal(bound.second_radicand));
    });
  }
}

void criterion_negative_control(Tally& t, const VerifyOptions& opts) {
  const Case c{11, 1, 1};
  t.run(c, opts, [&] {
    const Graph g(c.spec(), BuildMode::lazy, opts.max_vertices);
    const Field& f = g.field();
    auto fp = [&](std::int64_t v) { return f.from_fp(static_cast<std::uint64_t>((v % 11 + 11) % 11)); };
    CycleWitness w;
    w.points = {g.vertex_fp(Side::point, {0, 0}),  g.vertex_fp(Side::point, {-1, -1}), g.vertex_fp(Side::point, {-2, 0}),
                g.vertex_fp(Side::point, {0, 0}),  g.vertex_fp(Side::point, {-1, -2}), g.vertex_fp(Side::point, {-2, -8})};
    w.lines = {g.vertex_fp(Side::line, {1, 0}), g.vertex_fp(Side::line, {-1, 2}), g.vertex_fp(Side::line, {0, 0}),
               g.vertex_fp(Side::line, {2, 0}), g.vertex_fp(Side::line, {6, -4}), g.vertex_fp(Side::line, {4, 0})};
    w.u = {fp(1), fp(1), fp(-2), fp(1), fp(1), fp(-2)};
    w.c = {fp(1), fp(-1), fp(0), fp(2), fp(6), fp(4)};
    t.check(verify_cycle_system(g, w), "difference system rejects the L_1(11) six-tuple");
    t.check(!is_valid_cycle(g, w), "cycle validation accepts the L_1(11) six-tuple");
    t.check(w.points[3] == w.points[0], "P_4 != P_1 in the L_1(11) six-tuple");
  });
}

const char* criterion_name(int id) {
  switch (id) {
    case 1: return "spectrum closed form vs enumeration";
    case 2: return "trace identity";
    case 3: return "regularity and counts";
    case 4: return "components";
    case 5: return "diameter";
    case 6: return "girth";
    case 7: return "witness validity";
    case 8: return "common neighbor oracle";
    case 9: return "rank count";
    case 10: return "expander radicand";
    case 11: return "negative control";
  }
  throw Error(ErrorCode::invalid_argument, "no criterion " + std::to_string(id));
}

}  // namespace

Adjacency perturb_one_edge(const Adjacency& adj, std::uint64_t side_size) {
  if (adj.vertex_count() < 2 || adj.neighbors(0).empty()) {
    throw Error(ErrorCode::invalid_argument, "nothing to perturb");
  }
  const auto nbrs0 = adj.neighbors(0);
  const std::uint32_t la = nbrs0.front();
  std::uint32_t lb = 0;
  bool found = false;
  for (auto v = static_cast<std::uint32_t>(side_size); v < adj.vertex_count(); ++v) {
    if (!std::binary_search(nbrs0.begin(), nbrs0.end(), v)) {
      lb = v;
      found = true;
      break;
    }
  }
  if (!found) throw Error(ErrorCode::invalid_argument, "point 0 is adjacent to every line");

  std::vector<std::vector<std::uint32_t>> lists(adj.vertex_count());
  for (std::size_t v = 0; v < adj.vertex_count(); ++v) {
    const auto n = adj.neighbors(v);
    lists[v].assign(n.begin(), n.end());
  }
  auto drop = [&](std::uint32_t v, std::uint32_t w) { std::erase(lists[v], w); };
  auto add = [&](std::uint32_t v, std::uint32_t w) {
    lists[v].insert(std::lower_bound(lists[v].begin(), lists[v].end(), w), w);
  };
  drop(0, la);
  drop(la, 0);
  add(0, lb);
  add(lb, 0);

  Adjacency out;
  out.offsets.push_back(0);
  for (const auto& l : lists) {
    out.targets.insert(out.targets.end(), l.begin(), l.end());
    out.offsets.push_back(out.targets.size());
  }
  return out;
}

CriterionResult run_criterion(int id, const VerifyOptions& opts) {
  CriterionResult r;
  r.id = id;
  r.name = criterion_name(id);
  const auto start = std::chrono::steady_clock::now();
  Tally t;
  switch (id) {
    case 1: criterion_spectrum(t, opts); break;
    case 2: criterion_trace(t, opts); break;
    case 3: criterion_regularity(t, opts); break;
    case 4: criterion_components(t, opts); break;
    case 5: criterion_diameter(t, opts); break;
    case 6: criterion_girth(t, opts); break;
    case 7: criterion_witnesses(t, opts); break;
    case 8: criterion_common_neighbor(t, opts); break;
    case 9: criterion_rank_count(t); break;
    case 10: criterion_expander(t, opts); break;
    case 11: criterion_negative_control(t, opts); break;
  }
  t.finish(r);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::vector<CriterionResult> run_acceptance(const VerifyOptions& opts) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= kCriterionCount; ++id) out.push_back(run_criterion(id, opts));
  return out;
}

std::string format_result(const CriterionResult& r) {
  std::ostringstream os;
  os << '[' << to_string(r.status) << "] " << (r.id < 10 ? " " : "") << r.id << ' ' << r.name << "  (" << r.detail
     << ", " << static_cast<long long>(r.seconds * 1000) << " ms)";
  return os.str();
}

}  // namespace wenger

#include "cli.hpp"

#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "wenger/error.hpp"
#include "wenger/metrics.hpp"
#include "wenger/spectrum.hpp"
#include "wenger/verify.hpp"

namespace wenger::cli {

namespace {

struct RunConfig {
  Fp p = 0;
  unsigned e = 1;
  unsigned m = 0;
  std::string family = "linearized";
  std::string f_list;
  std::string modulus;
  std::string method;
  std::string format = "edgelist";
  std::string out_path;
  bool json = false;
  std::uint64_t seed = 0;
  std::uint64_t max_vertices = kDefaultVertexBudget;
  std::uint64_t max_evals = kDefaultEvalBudget;
  bool perturb = false;
};

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::budget_exceeded: return budget_failure;
    case ErrorCode::io_error: return io_failure;
    default: return config_failure;
  }
}

FamilySpec make_spec(const RunConfig& cfg) {
  FamilySpec spec;
  spec.p = cfg.p;
  spec.e = cfg.e;
  spec.m = cfg.m;
  spec.kind = parse_family_kind(cfg.family);
  if (!cfg.modulus.empty()) spec.modulus = parse_modulus(cfg.modulus);
  if (!is_prime(cfg.p)) throw Error(ErrorCode::non_prime, "p must be prime (got " + std::to_string(cfg.p) + ")");
  if (spec.kind == FamilyKind::custom) {
    if (cfg.f_list.empty()) throw Error(ErrorCode::invalid_argument, "custom family needs --f-list");
    spec.custom_f = parse_f_list(cfg.f_list, cfg.p, cfg.e);
  } else if (!cfg.f_list.empty()) {
    throw Error(ErrorCode::invalid_argument, "--f-list is only valid with --family custom");
  }
  // Validates field, modulus and f-list before any work starts.
  (void)Family(spec);
  return spec;
}

// Writes to --out when given, otherwise to the normal output stream.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : fallback_(fallback) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw Error(ErrorCode::io_error, "cannot open '" + path + "' for writing");
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : fallback_; }
  bool to_file() const { return file_.is_open(); }
  void close() {
    if (file_.is_open()) {
      file_.close();
      if (!file_) throw Error(ErrorCode::io_error, "failed writing output file");
    }
  }

 private:
  std::ofstream file_;
  std::ostream& fallback_;
};

std::string eigenvalue_text(const SpectrumEntry& entry) {
  if (entry.sign == 0) return "0";
  const BigInt root = boost::multiprecision::sqrt(entry.radicand);
  const std::string mag = root * root == entry.radicand ? to_decimal(root) : "sqrt(" + to_decimal(entry.radicand) + ")";
  return entry.sign < 0 ? "-" + mag : mag;
}

void print_table(std::ostream& os, const SpectrumReport& r) {
  os << std::left << std::setw(16) << "eigenvalue" << "multiplicity\n";
  for (const auto& entry : r.entries) os << std::setw(16) << eigenvalue_text(entry) << to_decimal(entry.multiplicity) << '\n';
  os << std::setw(16) << "total" << to_decimal(r.total) << '\n';
}

// Closed form and enumeration in one table, keyed by eigenvalue.
void print_side_by_side(std::ostream& os, const SpectrumReport& closed, const SpectrumReport& enumerated) {
  std::vector<SpectrumEntry> keys = closed.entries;
  for (const auto& entry : enumerated.entries) {
    if (closed.multiplicity(entry.sign, entry.radicand) == 0) keys.push_back(entry);
  }
  std::stable_sort(keys.begin(), keys.end(), [](const SpectrumEntry& a, const SpectrumEntry& b) {
    if (a.sign != b.sign) return a.sign > b.sign;
    return a.sign >= 0 ? a.radicand > b.radicand : a.radicand < b.radicand;
  });
  os << std::left << std::setw(16) << "eigenvalue" << std::setw(16) << "closed" << "enumerated\n";
  for (const auto& k : keys) {
    os << std::setw(16) << eigenvalue_text(k) << std::setw(16) << to_decimal(closed.multiplicity(k.sign, k.radicand))
       << to_decimal(enumerated.multiplicity(k.sign, k.radicand)) << '\n';
  }
  os << std::setw(16) << "total" << std::setw(16) << to_decimal(closed.total) << to_decimal(enumerated.total) << '\n';
}

bool same_spectrum(const SpectrumReport& a, const SpectrumReport& b) {
  return a.entries == b.entries && a.total == b.total;
}

int cmd_build(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const FamilySpec spec = make_spec(cfg);
  const Graph g(spec, BuildMode::lazy, cfg.max_vertices);
  const std::map<std::string, ExportFormat> formats = {
      {"edgelist", ExportFormat::edgelist}, {"dimacs", ExportFormat::dimacs}, {"json", ExportFormat::json_meta}};
  Sink sink(cfg.out_path, out);
  export_graph(g, formats.at(cfg.format), sink.stream());
  const bool to_file = sink.to_file();
  sink.close();

  std::ostream& summary = to_file ? out : err;
  if (cfg.json) {
    summary << graph_meta(g).dump() << '\n';
  } else {
    summary << to_string(spec.kind) << " p=" << spec.p << " e=" << spec.e << " m=" << spec.m
            << " |V|=" << g.vertex_count() << " |E|=" << g.edge_count() << " regular=" << g.degree() << '\n';
  }
  return ok;
}

int cmd_spectrum(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const FamilySpec spec = make_spec(cfg);
  const Family family(spec);
  std::string method = cfg.method;
  if (method.empty()) method = spec.kind == FamilyKind::linearized && spec.m >= spec.e ? "both" : "enum";
  if (method != "enum" && spec.kind != FamilyKind::linearized) {
    throw Error(ErrorCode::unsupported_family, "closed form is only available for the linearized family");
  }

  std::optional<SpectrumReport> closed;
  std::optional<SpectrumReport> enumerated;
  if (method != "enum") closed = report_from_table(closed_form_linearized(spec.p, spec.e, spec.m));
  if (method != "closed") enumerated = spectrum_enumerate(family, cfg.max_evals);
  if (closed) closed->spec = spec;

  const bool both = closed && enumerated;
  const bool match = !both || same_spectrum(*closed, *enumerated);

  Sink sink(cfg.out_path, out);
  std::ostream& os = sink.stream();
  if (cfg.json) {
    if (both) {
      os << nlohmann::json{{"closed", to_json(*closed)}, {"enumerated", to_json(*enumerated)}, {"match", match}}.dump(2)
         << '\n';
    } else {
      os << to_json(closed ? *closed : *enumerated).dump(2) << '\n';
    }
  } else {
    os << to_string(spec.kind) << " p=" << spec.p << " e=" << spec.e << " m=" << spec.m << " q=" << family.q() << '\n';
    if (both) {
      print_side_by_side(os, *closed, *enumerated);
      os << (match ? "MATCH" : "MISMATCH") << '\n';
    } else {
      print_table(os, closed ? *closed : *enumerated);
    }
  }
  sink.close();
  if (!match) err << "closed form and enumeration disagree\n";
  return match ? ok : mismatch;
}

std::string predicted_text(const std::optional<std::uint64_t>& v) { return v ? std::to_string(*v) : "-"; }

std::string flag_text(const std::optional<bool>& v) {
  if (!v) return "n/a";
  return *v ? "yes" : "no";
}

int cmd_metrics(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const FamilySpec spec = make_spec(cfg);
  const Graph g(spec, BuildMode::materialized, cfg.max_vertices);
  const MetricsReport r = compute_metrics(g);

  // A seeded sample pair joined by an explicit path, where the construction applies.
  std::optional<PathWitness> witness;
  if (spec.kind == FamilyKind::linearized && spec.m <= spec.e) {
    std::mt19937_64 rng(cfg.seed);
    std::uniform_int_distribution<VertexId> pick(0, g.vertex_count() - 1);
    const Vertex a = g.decode(pick(rng));
    const Vertex b = g.decode(pick(rng));
    witness = diameter_witness(g, a, b);
  }

  Sink sink(cfg.out_path, out);
  std::ostream& os = sink.stream();
  if (cfg.json) {
    nlohmann::json j = to_json(r);
    j["spec"] = to_json(spec);
    if (witness) j["witness"] = path_ids(g, *witness);
    os << j.dump(2) << '\n';
  } else {
    os << "diameter " << r.diameter << " (predicted " << predicted_text(r.predicted.diameter) << ") girth " << r.girth
       << " (predicted " << predicted_text(r.predicted.girth) << ") components " << r.components << " (predicted "
       << predicted_text(r.predicted.components) << ")\n";
    os << "match diameter=" << flag_text(r.diameter_match()) << " girth=" << flag_text(r.girth_match())
       << " components=" << flag_text(r.components_match()) << '\n';
    if (witness) {
      os << "witness (seed " << cfg.seed << ") length " << witness->length() << ":";
      for (VertexId id : path_ids(g, *witness)) os << ' ' << id;
      os << '\n';
    }
  }
  sink.close();
  if (!r.all_match()) err << "measured metrics disagree with the predicted values\n";
  return r.all_match() ? ok : mismatch;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  VerifyOptions opts;
  opts.max_vertices = cfg.max_vertices;
  opts.perturb = cfg.perturb;
  opts.seed = cfg.seed;

  Sink sink(cfg.out_path, out);
  std::ostream& os = sink.stream();
  bool any_fail = false;
  nlohmann::json rows = nlohmann::json::array();
  for (int id = 1; id <= kCriterionCount; ++id) {
    const CriterionResult r = run_criterion(id, opts);
    any_fail = any_fail || r.status == Status::fail;
    if (cfg.json) {
      rows.push_back({{"id", r.id},
                      {"name", r.name},
                      {"status", std::string(to_string(r.status))},
                      {"detail", r.detail},
                      {"seconds", r.seconds}});
    } else {
      os << format_result(r) << std::endl;
    }
  }
  if (cfg.json) {
    os << nlohmann::json{{"criteria", rows}, {"passed", !any_fail}}.dump(2) << '\n';
  } else {
    os << (any_fail ? "FAIL" : "PASS") << '\n';
  }
  sink.close();
  return any_fail ? mismatch : ok;
}

void add_family_options(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--p", cfg.p, "characteristic")->required();
  sub->add_option("--e", cfg.e, "extension degree")->capture_default_str();
  sub->add_option("--m", cfg.m, "dimension parameter")->required();
  sub->add_option("--family", cfg.family, "wenger, linearized or custom")
      ->check(CLI::IsMember({"wenger", "linearized", "custom"}))
      ->capture_default_str();
  sub->add_option("--f-list", cfg.f_list, "custom f_2..f_{m+1}: poly;poly;... with comma separated coefficients");
  sub->add_option("--modulus", cfg.modulus, "c0,c1,...,ce low degree first");
}

void add_common_options(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--out", cfg.out_path, "output file");
  sub->add_flag("--json", cfg.json, "machine readable output");
  sub->add_option("--seed", cfg.seed, "seed for sampled pairs")->capture_default_str();
  sub->add_option("--max-vertices", cfg.max_vertices, "vertex budget")->capture_default_str();
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Wenger and linearized Wenger graphs over GF(p^e)", "wenger"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* build = app.add_subcommand("build", "construct a graph and export it");
  add_family_options(build, cfg);
  add_common_options(build, cfg);
  build->add_option("--format", cfg.format, "edgelist, dimacs or json")
      ->check(CLI::IsMember({"edgelist", "dimacs", "json"}))
      ->capture_default_str();

  auto* spectrum = app.add_subcommand("spectrum", "exact spectrum by closed form and/or enumeration");
  add_family_options(spectrum, cfg);
  add_common_options(spectrum, cfg);
  spectrum->add_option("--method", cfg.method, "closed, enum or both")->check(CLI::IsMember({"closed", "enum", "both"}));
  spectrum->add_option("--max-evals", cfg.max_evals, "evaluation budget for enumeration")->capture_default_str();

  auto* metrics = app.add_subcommand("metrics", "components, diameter and girth against predictions");
  add_family_options(metrics, cfg);
  add_common_options(metrics, cfg);

  auto* verify = app.add_subcommand("verify", "run the acceptance suite");
  add_common_options(verify, cfg);
  verify->add_flag("--perturb", cfg.perturb, "rewire one edge of every graph (fault injection)");

  std::vector<std::string> argv_store{"wenger"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return config_failure;
  }

  try {
    if (*build) return cmd_build(cfg, out, err);
    if (*spectrum) return cmd_spectrum(cfg, out, err);
    if (*metrics) return cmd_metrics(cfg, out, err);
    return cmd_verify(cfg, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::bad_alloc&) {
    err << "error: out of memory\n";
    return budget_failure;
  }
}

}  // namespace wenger::cli

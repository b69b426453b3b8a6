#include "wenger/spectrum.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "wenger/error.hpp"
#include "wenger/kernels.hpp"
#include "wenger/linearized.hpp"

namespace wenger {

std::string_view to_string(Provenance p) {
  switch (p) {
    case Provenance::enumerated: return "enumerated";
    case Provenance::closed_form: return "closed_form";
    case Provenance::oracle: return "oracle";
  }
  return "unknown";
}

namespace {

Provenance parse_provenance(const std::string& s) {
  if (s == "enumerated") return Provenance::enumerated;
  if (s == "closed_form") return Provenance::closed_form;
  if (s == "oracle") return Provenance::oracle;
  throw Error(ErrorCode::parse_error, "unknown provenance '" + s + "'");
}

// Eigenvalue order, largest first: +sqrt descending, 0, -sqrt ascending.
bool eigen_greater(const SpectrumEntry& a, const SpectrumEntry& b) {
  if (a.sign != b.sign) return a.sign > b.sign;
  return a.sign >= 0 ? a.radicand > b.radicand : a.radicand < b.radicand;
}

// Accumulates (radicand -> number of w) into a signed report.
SpectrumReport build_report(const FamilySpec& spec, const std::map<BigInt, BigInt>& by_radicand, Provenance prov) {
  SpectrumReport r;
  r.spec = spec;
  r.provenance = prov;
  for (const auto& [radicand, count] : by_radicand) {
    if (count == 0) continue;
    if (radicand == 0) {
      r.entries.push_back({0, 0, 2 * count});
    } else {
      r.entries.push_back({+1, radicand, count});
      r.entries.push_back({-1, radicand, count});
    }
    r.total += 2 * count;
  }
  std::sort(r.entries.begin(), r.entries.end(), eigen_greater);
  return r;
}

// prod_{j<k} (p^e - p^j)^2 / prod_{j<k} (p^k - p^j): the number of
// F_p-linear maps F_q -> F_q of rank k.
BigInt linear_maps_of_rank(Fp p, unsigned e, unsigned k) { return rank_count(e, e, k, p); }

}  // namespace

BigInt SpectrumReport::multiplicity(int sign, const BigInt& radicand) const {
  for (const auto& entry : entries) {
    if (entry.sign == sign && entry.radicand == radicand) return entry.multiplicity;
  }
  return 0;
}

std::vector<BigInt> SpectrumReport::radicands() const {
  std::vector<BigInt> out;
  for (const auto& entry : entries) out.push_back(entry.radicand);
  std::sort(out.begin(), out.end(), std::greater<>());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::uint64_t> root_count_histogram(const Family& family, std::uint64_t max_evals) {
  if (!family.theta_injective()) {
    throw Error(ErrorCode::theta_not_injective, "u -> (1, f_2(u), ..., f_{m+1}(u)) is not injective");
  }
  const std::uint64_t q = family.q();
  BigInt evals = big_pow(q, family.m() + 2);
  if (evals > max_evals) {
    throw Error(ErrorCode::budget_exceeded,
                "enumeration needs " + to_decimal(evals) + " evaluations, budget is " + std::to_string(max_evals));
  }
  return parallel::root_histogram(family);
}

SpectrumReport report_from_histogram(const FamilySpec& spec, std::uint64_t q, const std::vector<std::uint64_t>& hist) {
  std::map<BigInt, BigInt> by_radicand;
  for (std::size_t n = 0; n < hist.size(); ++n) by_radicand[BigInt(q) * n] += hist[n];
  return build_report(spec, by_radicand, Provenance::enumerated);
}

SpectrumReport spectrum_enumerate(const Family& family, std::uint64_t max_evals) {
  return report_from_histogram(family.spec(), family.q(), root_count_histogram(family, max_evals));
}

MultiplicityTable closed_form_linearized(Fp p, unsigned e, unsigned m) {
  if (m < e) {
    throw Error(ErrorCode::unsupported_regime,
                "closed form requires m ≥ e (got m = " + std::to_string(m) + ", e = " + std::to_string(e) + ")");
  }
  if (!is_prime(p)) throw Error(ErrorCode::non_prime, "p must be prime");
  MultiplicityTable t;
  t.p = p;
  t.e = e;
  t.m = m;
  const std::uint64_t q = static_cast<std::uint64_t>(big_pow(p, e));
  t.scale = big_pow(q, m - e);
  t.n_pi.resize(e + 1);
  t.n0 = 0;
  for (unsigned i = 0; i <= e; ++i) {
    // Maps with kernel dimension i have rank e - i; p^{e-i} choices of -w_1
    // land in the image and p^e - p^{e-i} miss it.
    const BigInt maps = linear_maps_of_rank(p, e, e - i);
    t.n_pi[i] = big_pow(p, e - i) * maps * t.scale;
    if (i >= 1) t.n0 += (big_pow(p, e) - big_pow(p, e - i)) * maps;
  }
  t.n0 *= t.scale;
  return t;
}

SpectrumReport report_from_table(const MultiplicityTable& table) {
  const BigInt q = big_pow(table.p, table.e);
  std::map<BigInt, BigInt> by_radicand;
  for (unsigned i = 0; i <= table.e; ++i) by_radicand[q * big_pow(table.p, i)] += table.n_pi[i];
  by_radicand[0] += table.n0;
  return build_report(FamilySpec::linearized(table.p, table.e, table.m), by_radicand, Provenance::closed_form);
}

bool table_matches_histogram(const MultiplicityTable& table, const std::vector<std::uint64_t>& hist) {
  std::map<std::uint64_t, BigInt> expected;
  expected[0] = table.n0;
  std::uint64_t pi = 1;
  for (unsigned i = 0; i <= table.e; ++i, pi *= table.p) expected[pi] += table.n_pi[i];
  for (std::size_t n = 0; n < hist.size(); ++n) {
    const auto it = expected.find(n);
    const BigInt want = it == expected.end() ? BigInt(0) : it->second;
    if (want != hist[n]) return false;
  }
  for (const auto& [n, count] : expected) {
    if (n >= hist.size() && count != 0) return false;
  }
  return true;
}

BigInt component_count_formula(const Family& family) {
  const std::size_t rank = family.function_rank();
  return big_pow(family.q(), static_cast<unsigned>(family.m() + 1 - rank));
}

BigInt walk_trace(const Adjacency& adj, unsigned k) { return parallel::closed_walks(adj, k); }

BigInt walk_trace(const Graph& g, unsigned k) { return walk_trace(*g.adjacency(), k); }

BigInt spectral_moment(const std::vector<std::uint64_t>& hist, std::uint64_t q, unsigned k) {
  BigInt total = 0;
  for (std::size_t n = 0; n < hist.size(); ++n) total += BigInt(hist[n]) * big_pow(q * n, k);
  return 2 * total;
}

ExpansionBound expansion_bound(Fp p, unsigned e) {
  if (!is_prime(p)) throw Error(ErrorCode::non_prime, "p must be prime");
  if (e == 0) throw Error(ErrorCode::invalid_argument, "e must be positive");
  ExpansionBound b;
  b.q = big_pow(p, e);
  b.radicand = b.q * big_pow(p, e - 1);
  b.divisor = 2;
  b.second_radicand = b.radicand;
  return b;
}

nlohmann::json to_json(const FamilySpec& spec) {
  nlohmann::json j = {
      {"p", spec.p},
      {"e", spec.e},
      {"m", spec.m},
      {"family", std::string(to_string(spec.kind))},
  };
  j["modulus"] = spec.modulus ? nlohmann::json(*spec.modulus) : nlohmann::json(nullptr);
  if (spec.kind == FamilyKind::custom) j["f_list"] = spec.custom_f;
  return j;
}

FamilySpec family_spec_from_json(const nlohmann::json& j) {
  FamilySpec spec;
  spec.p = j.at("p").get<Fp>();
  spec.e = j.at("e").get<unsigned>();
  spec.m = j.at("m").get<unsigned>();
  spec.kind = parse_family_kind(j.at("family").get<std::string>());
  if (j.contains("modulus") && !j.at("modulus").is_null()) spec.modulus = j.at("modulus").get<std::vector<Fp>>();
  if (j.contains("f_list")) spec.custom_f = j.at("f_list").get<std::vector<std::vector<std::uint64_t>>>();
  return spec;
}

nlohmann::json to_json(const SpectrumReport& report) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& entry : report.entries) {
    entries.push_back({
        {"sign", entry.sign > 0 ? "+" : entry.sign < 0 ? "-" : "0"},
        {"radicand", to_decimal(entry.radicand)},
        {"multiplicity", to_decimal(entry.multiplicity)},
    });
  }
  return {
      {"spec", to_json(report.spec)},
      {"entries", entries},
      {"total", to_decimal(report.total)},
      {"provenance", std::string(to_string(report.provenance))},
  };
}

SpectrumReport spectrum_report_from_json(const nlohmann::json& j) {
  SpectrumReport r;
  r.spec = family_spec_from_json(j.at("spec"));
  for (const auto& e : j.at("entries")) {
    const auto sign = e.at("sign").get<std::string>();
    SpectrumEntry entry;
    if (sign == "+") {
      entry.sign = 1;
    } else if (sign == "-") {
      entry.sign = -1;
    } else if (sign == "0") {
      entry.sign = 0;
    } else {
      throw Error(ErrorCode::parse_error, "bad eigenvalue sign '" + sign + "'");
    }
    entry.radicand = parse_decimal(e.at("radicand").get<std::string>());
    entry.multiplicity = parse_decimal(e.at("multiplicity").get<std::string>());
    r.entries.push_back(std::move(entry));
  }
  r.total = parse_decimal(j.at("total").get<std::string>());
  r.provenance = parse_provenance(j.at("provenance").get<std::string>());
  return r;
}

}  // namespace wenger

#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "wenger/bigint.hpp"
#include "wenger/family.hpp"
#include "wenger/graph.hpp"

namespace wenger {

inline constexpr std::uint64_t kDefaultEvalBudget = 100'000'000;

enum class Provenance { enumerated, closed_form, oracle };

std::string_view to_string(Provenance p);

/// One exact eigenvalue sign * sqrt(radicand) with its multiplicity. The
/// eigenvalue 0 has sign 0 and counts both of its +/- positions.
struct SpectrumEntry {
  int sign = 0;
  BigInt radicand;
  BigInt multiplicity;

  friend bool operator==(const SpectrumEntry&, const SpectrumEntry&) = default;
};

struct SpectrumReport {
  FamilySpec spec;
  /// Sorted by eigenvalue, largest first.
  std::vector<SpectrumEntry> entries;
  BigInt total;
  Provenance provenance = Provenance::enumerated;

  friend bool operator==(const SpectrumReport&, const SpectrumReport&) = default;

  /// Multiplicity of sign * sqrt(radicand), zero if absent.
  BigInt multiplicity(int sign, const BigInt& radicand) const;
  /// Distinct radicands, largest first.
  std::vector<BigInt> radicands() const;
};

/// Root-count multiplicities for the linearized family with m >= e.
struct MultiplicityTable {
  Fp p = 0;
  unsigned e = 0;
  unsigned m = 0;
  /// n_pi[i] = multiplicity of +/-sqrt(q p^i), already scaled.
  std::vector<BigInt> n_pi;
  /// Number of w with no root (eigenvalue 0 appears 2 * n0 times), scaled.
  BigInt n0;
  /// q^{m-e}.
  BigInt scale;
};

/// Spectrum from the histogram of root counts N_{F_w} over all w; each w
/// contributes +/-sqrt(q N_{F_w}).
SpectrumReport spectrum_enumerate(const Family& family, std::uint64_t max_evals = kDefaultEvalBudget);

/// The enumeration histogram itself (hist[N] for N in [0, q]), subject to
/// the same preconditions as spectrum_enumerate.
std::vector<std::uint64_t> root_count_histogram(const Family& family, std::uint64_t max_evals = kDefaultEvalBudget);

MultiplicityTable closed_form_linearized(Fp p, unsigned e, unsigned m);

SpectrumReport report_from_histogram(const FamilySpec& spec, std::uint64_t q, const std::vector<std::uint64_t>& hist);
SpectrumReport report_from_table(const MultiplicityTable& table);

/// Exact equality of the closed form with an enumerated histogram.
bool table_matches_histogram(const MultiplicityTable& table, const std::vector<std::uint64_t>& hist);

/// q^{m+1-rank_{F_q}(1, f_2, ..., f_{m+1})}.
BigInt component_count_formula(const Family& family);

/// trace(A^{2k}) by walk counting on the materialized graph, 1 <= k <= 4.
BigInt walk_trace(const Graph& g, unsigned k);
BigInt walk_trace(const Adjacency& adj, unsigned k);

/// 2 * sum_w (q N_{F_w})^k from a root-count histogram.
BigInt spectral_moment(const std::vector<std::uint64_t>& hist, std::uint64_t q, unsigned k);

/// Edge-expansion lower bound (q - sqrt(radicand)) / divisor for L_e(q).
struct ExpansionBound {
  BigInt q;
  BigInt radicand;
  BigInt divisor;
  /// Second-largest radicand of the spectrum, q p^{e-1}.
  BigInt second_radicand;
  /// The bound only applies when m = e.
  bool requires_m_equals_e = true;
};

ExpansionBound expansion_bound(Fp p, unsigned e);

nlohmann::json to_json(const FamilySpec& spec);
FamilySpec family_spec_from_json(const nlohmann::json& j);
nlohmann::json to_json(const SpectrumReport& report);
SpectrumReport spectrum_report_from_json(const nlohmann::json& j);

}  // namespace wenger

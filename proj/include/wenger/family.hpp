#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wenger/field.hpp"

namespace wenger {

/// Which f_k the adjacency l_k + p_k = f_k(p_1) l_1 uses.
///   wenger:     f_k(x) = x^{k-1}
///   linearized: f_k(x) = x^{p^{k-2}}
///   custom:     user supplied univariate polynomials over F_q
enum class FamilyKind { wenger, linearized, custom };

std::string_view to_string(FamilyKind kind);
FamilyKind parse_family_kind(std::string_view name);

struct FamilySpec {
  Fp p = 2;
  unsigned e = 1;
  std::optional<std::vector<Fp>> modulus;
  unsigned m = 1;
  FamilyKind kind = FamilyKind::linearized;
  /// custom only: f_2, ..., f_{m+1}, each a list of coefficients (canonical
  /// element indices), low degree first.
  std::vector<std::vector<std::uint64_t>> custom_f;

  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;

  static FamilySpec linearized(Fp p, unsigned e, unsigned m) { return {p, e, std::nullopt, m, FamilyKind::linearized, {}}; }
  static FamilySpec wenger(Fp p, unsigned e, unsigned m) { return {p, e, std::nullopt, m, FamilyKind::wenger, {}}; }
};

/// A FamilySpec realized over a concrete field.
class Family {
 public:
  explicit Family(FamilySpec spec);

  const FamilySpec& spec() const { return spec_; }
  const Field& field() const { return field_; }
  FamilyKind kind() const { return spec_.kind; }
  unsigned m() const { return spec_.m; }
  std::uint64_t q() const { return field_.order(); }

  /// f_k(x) for 2 <= k <= m+1.
  FieldElement f(unsigned k, const FieldElement& x) const;

  /// Whether u -> (1, f_2(u), ..., f_{m+1}(u)) is injective on F_q.
  bool theta_injective() const { return theta_injective_; }

  /// rank over F_q of the functions 1, f_2, ..., f_{m+1} on F_q, from the
  /// full (m+1) x q evaluation matrix.
  std::size_t function_rank() const;

 private:
  FamilySpec spec_;
  Field field_;
  std::vector<std::vector<FieldElement>> custom_coeffs_;
  bool theta_injective_ = true;
};

/// "c0,c1,...,ce" -> coefficient list.
std::vector<Fp> parse_modulus(std::string_view text);

/// "poly;poly;..." where each poly is a comma separated coefficient list,
/// low degree first, and each coefficient is a base-p numeral (digits 0-9
/// then a-z, most significant first) naming the canonical element index.
std::vector<std::vector<std::uint64_t>> parse_f_list(std::string_view text, Fp p, unsigned e);

}  // namespace wenger

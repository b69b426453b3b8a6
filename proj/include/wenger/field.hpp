#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace wenger {

/// An element of the prime field F_p, always kept reduced into [0, p).
using Fp = std::uint32_t;

inline constexpr unsigned kMaxDegree = 24;
inline constexpr Fp kMaxPrime = 1u << 15;
inline constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 24;

class Field;

/// Coordinates of an element of GF(p^e) in the polynomial basis
/// (1, t, ..., t^{e-1}), tagged with the fingerprint of the owning field.
/// A default-constructed element belongs to no field and is rejected by
/// every Field operation.
class FieldElement {
 public:
  FieldElement() = default;

  std::span<const std::uint16_t> coeffs() const { return {c_.data(), degree_}; }
  std::uint16_t coeff(unsigned i) const { return c_[i]; }
  std::uint64_t field_id() const { return field_id_; }
  bool is_zero() const;

  friend bool operator==(const FieldElement&, const FieldElement&) = default;

 private:
  friend class Field;

  std::uint64_t field_id_ = 0;
  std::uint8_t degree_ = 0;
  std::array<std::uint16_t, kMaxDegree> c_{};
};

/// GF(p^e) = F_p[t] / (modulus). Immutable after construction; every
/// operation is a pure function, so a Field can be shared across threads.
class Field {
 public:
  /// Without an explicit modulus the Conway polynomial is used for p <= 11,
  /// e <= 6, otherwise the lexicographically smallest monic irreducible.
  Field(Fp p, unsigned e, std::optional<std::vector<Fp>> modulus = std::nullopt);

  Fp characteristic() const { return p_; }
  unsigned degree() const { return e_; }
  std::uint64_t order() const { return q_; }
  /// e+1 coefficients, low degree first, monic.
  const std::vector<Fp>& modulus() const { return modulus_; }
  std::uint64_t id() const { return id_; }

  bool contains(const FieldElement& x) const { return x.field_id_ == id_; }

  FieldElement zero() const;
  FieldElement one() const;
  /// Image of a prime-field value (reduced mod p).
  FieldElement from_fp(std::uint64_t a) const;
  FieldElement from_coeffs(std::span<const Fp> coeffs) const;
  /// Canonical order: coordinates read as a base-p integer, low basis
  /// coordinate least significant.
  FieldElement element(std::uint64_t index) const;
  std::uint64_t index(const FieldElement& x) const;
  /// The basis element t^i.
  FieldElement basis(unsigned i) const;
  const std::vector<FieldElement>& dual_basis() const { return dual_; }

  FieldElement add(const FieldElement& a, const FieldElement& b) const;
  FieldElement sub(const FieldElement& a, const FieldElement& b) const;
  FieldElement neg(const FieldElement& a) const;
  FieldElement mul(const FieldElement& a, const FieldElement& b) const;
  FieldElement inv(const FieldElement& a) const;
  FieldElement div(const FieldElement& a, const FieldElement& b) const;
  FieldElement pow(const FieldElement& a, std::uint64_t k) const;
  /// x -> x^{p^times}, applied through the precomputed Frobenius matrix.
  FieldElement frobenius(const FieldElement& a, unsigned times = 1) const;
  /// Absolute trace to F_p.
  Fp trace(const FieldElement& a) const;

  /// a*x for a prime-field scalar a.
  FieldElement scale(const FieldElement& x, Fp a) const;

 private:
  void check(const FieldElement& x) const;
  FieldElement blank() const;

  Fp p_;
  unsigned e_;
  std::uint64_t q_;
  std::vector<Fp> modulus_;
  std::uint64_t id_;
  // frob_[j * e + i] is coordinate i of (t^j)^p.
  std::vector<Fp> frob_;
  std::vector<Fp> basis_trace_;
  std::vector<FieldElement> dual_;
};

bool is_prime(std::uint64_t n);

/// Irreducibility over F_p of a monic polynomial given low degree first:
/// root search for degree <= 3, distinct-degree gcd test above that.
bool is_irreducible(Fp p, std::span<const Fp> monic);

std::optional<std::vector<Fp>> conway_polynomial(Fp p, unsigned e);
std::vector<Fp> default_modulus(Fp p, unsigned e);

/// tr(x) = x + x^p + ... + x^{p^{e-1}}, read in F_p.
Fp abs_trace(const Field& field, const FieldElement& x);

/// Dual basis of (1, t, ..., t^{e-1}) under the trace form, computed by
/// inverting the Gram matrix T_ij = tr(t^i t^j).
std::vector<FieldElement> dual_basis_of(const Field& field);

}  // namespace wenger

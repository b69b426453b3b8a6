#pragma once

#include <cstdint>
#include <vector>

#include "wenger/bigint.hpp"
#include "wenger/family.hpp"
#include "wenger/linalg.hpp"

namespace wenger {

/// w = (w_1, ..., w_{m+1}).
using WeightVector = std::vector<FieldElement>;

/// The weight vector with index `index` in canonical order: w_j is the
/// element whose index is digit j-1 of `index` written base q.
WeightVector weight_from_index(const Family& family, std::uint64_t index);

/// F_w(x) = w_1 + sum_{k>=2} w_k f_k(x) together with its non-constant part
/// Fbar_w. Holds a reference to the family, which must outlive it.
class LinPoly {
 public:
  LinPoly(const Family& family, WeightVector w);

  const Family& family() const { return *family_; }
  const Field& field() const { return family_->field(); }
  const WeightVector& weights() const { return w_; }

  FieldElement eval(const FieldElement& x) const;
  FieldElement eval_linear(const FieldElement& x) const;

  /// Matrix of Fbar_w in the polynomial basis: column j holds the
  /// coordinates of Fbar_w(t^j). Linearized family only.
  FpMatrix linear_matrix() const;

 private:
  const Family* family_;
  WeightVector w_;
};

/// dim_{F_p} ker Fbar_w = e - rank(linear_matrix). Linearized family only.
unsigned kernel_dim(const LinPoly& poly);

/// Whether y lies in Im Fbar_w, decided by solving the e x e F_p system.
bool in_image(const LinPoly& poly, const FieldElement& y);

/// beta_1..beta_e with Fbar_w(x) = sum_i tr(beta_i x) t^{i-1}.
std::vector<FieldElement> beta_rep(const LinPoly& poly);

/// |{u : F_w(u) = 0}| by evaluating at every field element.
std::uint64_t count_roots_exhaustive(const LinPoly& poly);

/// Same count for the linearized family: p^{kernel_dim} when -w_1 is in the
/// image of Fbar_w, else 0.
std::uint64_t count_roots_structured(const LinPoly& poly);

/// Structured route for the linearized family, exhaustive otherwise.
std::uint64_t count_roots(const LinPoly& poly);

/// Number of l x n matrices over F_q of rank k:
/// prod_{i<k} (q^l - q^i)(q^n - q^i) / prod_{i<k} (q^k - q^i).
BigInt rank_count(unsigned l, unsigned n, unsigned k, std::uint64_t q);

}  // namespace wenger

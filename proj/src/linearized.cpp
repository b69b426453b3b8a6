#include "wenger/linearized.hpp"

#include <algorithm>

#include "wenger/error.hpp"

namespace wenger {

namespace {

void require_linearized(const LinPoly& poly, const char* what) {
  if (poly.family().kind() != FamilyKind::linearized) {
    throw Error(ErrorCode::unsupported_family, std::string(what) + " requires the linearized family");
  }
}

}  // namespace

WeightVector weight_from_index(const Family& family, std::uint64_t index) {
  const std::uint64_t q = family.q();
  WeightVector w;
  w.reserve(family.m() + 1);
  for (unsigned j = 0; j <= family.m(); ++j) {
    w.push_back(family.field().element(index % q));
    index /= q;
  }
  if (index != 0) throw Error(ErrorCode::out_of_range, "weight index out of range");
  return w;
}

LinPoly::LinPoly(const Family& family, WeightVector w) : family_(&family), w_(std::move(w)) {
  if (w_.size() != family.m() + 1) {
    throw Error(ErrorCode::invalid_argument, "weight vector must have m+1 = " + std::to_string(family.m() + 1) + " entries");
  }
  for (const auto& x : w_) {
    if (!family.field().contains(x)) throw Error(ErrorCode::field_mismatch, "weight not in the family's field");
  }
}

FieldElement LinPoly::eval_linear(const FieldElement& x) const {
  const Field& f = field();
  FieldElement acc = f.zero();
  for (unsigned k = 2; k <= family_->m() + 1; ++k) {
    if (w_[k - 1].is_zero()) continue;
    acc = f.add(acc, f.mul(w_[k - 1], family_->f(k, x)));
  }
  return acc;
}

FieldElement LinPoly::eval(const FieldElement& x) const { return field().add(w_[0], eval_linear(x)); }

FpMatrix LinPoly::linear_matrix() const {
  require_linearized(*this, "linear_matrix");
  const Field& f = field();
  const unsigned e = f.degree();
  FpMatrix m(e, e, f.characteristic());
  for (unsigned j = 0; j < e; ++j) {
    const FieldElement img = eval_linear(f.basis(j));
    for (unsigned i = 0; i < e; ++i) m.set(i, j, img.coeff(i));
  }
  return m;
}

unsigned kernel_dim(const LinPoly& poly) {
  const FpMatrix m = poly.linear_matrix();
  return static_cast<unsigned>(m.cols() - fp_rank_kernel(m).rank);
}

bool in_image(const LinPoly& poly, const FieldElement& y) {
  const FpMatrix m = poly.linear_matrix();
  std::vector<Fp> rhs(y.coeffs().begin(), y.coeffs().end());
  return fp_solve(m, rhs).has_value();
}

std::vector<FieldElement> beta_rep(const LinPoly& poly) {
  // Coordinate i of Fbar_w(x) is sum_j M_ij x_j and x_j = tr(delta_j x), so
  // beta_i = sum_j M_ij delta_j.
  const FpMatrix m = poly.linear_matrix();
  const Field& f = poly.field();
  const auto& dual = f.dual_basis();
  std::vector<FieldElement> beta;
  beta.reserve(f.degree());
  for (unsigned i = 0; i < f.degree(); ++i) {
    FieldElement b = f.zero();
    for (unsigned j = 0; j < f.degree(); ++j) b = f.add(b, f.scale(dual[j], m(i, j)));
    beta.push_back(b);
  }
  return beta;
}

std::uint64_t count_roots_exhaustive(const LinPoly& poly) {
  const Field& f = poly.field();
  std::uint64_t n = 0;
  for (std::uint64_t i = 0; i < f.order(); ++i) {
    if (poly.eval(f.element(i)).is_zero()) ++n;
  }
  return n;
}

std::uint64_t count_roots_structured(const LinPoly& poly) {
  const Field& f = poly.field();
  const FpMatrix m = poly.linear_matrix();
  const FieldElement target = f.neg(poly.weights()[0]);
  std::vector<Fp> rhs(target.coeffs().begin(), target.coeffs().end());
  if (!fp_solve(m, rhs)) return 0;
  const std::size_t dim = m.cols() - fp_rank_kernel(m).rank;
  std::uint64_t n = 1;
  for (std::size_t i = 0; i < dim; ++i) n *= f.characteristic();
  return n;
}

std::uint64_t count_roots(const LinPoly& poly) {
  return poly.family().kind() == FamilyKind::linearized ? count_roots_structured(poly) : count_roots_exhaustive(poly);
}

BigInt rank_count(unsigned l, unsigned n, unsigned k, std::uint64_t q) {
  if (k > std::min(l, n)) throw Error(ErrorCode::invalid_rank, "rank exceeds min(l, n)");
  if (q < 2) throw Error(ErrorCode::invalid_argument, "q must be at least 2");
  const BigInt ql = big_pow(q, l);
  const BigInt qn = big_pow(q, n);
  const BigInt qk = big_pow(q, k);
  BigInt num = 1;
  BigInt den = 1;
  for (unsigned i = 0; i < k; ++i) {
    const BigInt qi = big_pow(q, i);
    num *= (ql - qi) * (qn - qi);
    den *= qk - qi;
  }
  if (num % den != 0) throw Error(ErrorCode::solve_failed, "rank count division is not exact");
  return num / den;
}

}  // namespace wenger

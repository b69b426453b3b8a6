#include "wenger/field.hpp"

#include <algorithm>
#include <string>

#include "wenger/error.hpp"
#include "wenger/linalg.hpp"

namespace wenger {

namespace {

using Poly = std::vector<Fp>;  // low degree first, no trailing zeros except for the zero poly {}

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int deg(const Poly& a) { return a.empty() ? -1 : static_cast<int>(a.size()) - 1; }

Fp mulmod_p(std::uint64_t a, std::uint64_t b, Fp p) { return static_cast<Fp>(a * b % p); }

// a mod f, f monic.
Poly poly_mod(Poly a, const Poly& f, Fp p) {
  trim(a);
  const int n = deg(f);
  for (int d = deg(a); d >= n; --d) {
    const Fp c = a[d];
    if (c == 0) continue;
    for (int k = 0; k <= n; ++k) {
      auto& slot = a[d - n + k];
      slot = static_cast<Fp>((slot + static_cast<std::uint64_t>(p - c) * f[k]) % p);
    }
  }
  trim(a);
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, Fp p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      r[i + j] = static_cast<Fp>((r[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p);
    }
  }
  return poly_mod(std::move(r), f, p);
}

Poly poly_powmod(Poly base, std::uint64_t k, const Poly& f, Fp p) {
  Poly result{1};
  base = poly_mod(std::move(base), f, p);
  while (k != 0) {
    if (k & 1) result = poly_mulmod(result, base, f, p);
    base = poly_mulmod(base, base, f, p);
    k >>= 1;
  }
  return result;
}

// Remainder of a by b for arbitrary nonzero b (not necessarily monic).
Poly poly_rem(Poly a, const Poly& b, Fp p) {
  trim(a);
  const int n = deg(b);
  const Fp lead_inv = fp_inv(b.back(), p);
  for (int d = deg(a); d >= n; --d) {
    const Fp c = mulmod_p(a[d], lead_inv, p);
    if (c == 0) continue;
    for (int k = 0; k <= n; ++k) {
      auto& slot = a[d - n + k];
      slot = static_cast<Fp>((slot + static_cast<std::uint64_t>(p - c) * b[k]) % p);
    }
  }
  trim(a);
  return a;
}

Poly poly_gcd(Poly a, Poly b, Fp p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

std::uint64_t fingerprint(Fp p, unsigned e, const std::vector<Fp>& modulus) {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](std::uint64_t v) {
    for (int i = 0; i < 8; ++i) {
      h ^= (v >> (8 * i)) & 0xff;
      h *= 1099511628211ull;
    }
  };
  mix(p);
  mix(e);
  for (Fp c : modulus) mix(c);
  return h == 0 ? 1 : h;
}

struct ConwayEntry {
  Fp p;
  unsigned e;
  std::vector<Fp> coeffs;
};

// Conway polynomials, low degree first.
const std::vector<ConwayEntry>& conway_table() {
  static const std::vector<ConwayEntry> table = {
      {2, 1, {1, 1}},
      {2, 2, {1, 1, 1}},
      {2, 3, {1, 1, 0, 1}},
      {2, 4, {1, 1, 0, 0, 1}},
      {2, 5, {1, 0, 1, 0, 0, 1}},
      {2, 6, {1, 1, 0, 1, 1, 0, 1}},
      {3, 1, {1, 1}},
      {3, 2, {2, 2, 1}},
      {3, 3, {1, 2, 0, 1}},
      {3, 4, {2, 0, 0, 2, 1}},
      {3, 5, {1, 2, 0, 0, 0, 1}},
      {3, 6, {2, 2, 1, 0, 2, 0, 1}},
      {5, 1, {3, 1}},
      {5, 2, {2, 4, 1}},
      {5, 3, {3, 3, 0, 1}},
      {5, 4, {2, 4, 4, 0, 1}},
      {5, 5, {3, 4, 0, 0, 0, 1}},
      {5, 6, {2, 0, 1, 4, 1, 0, 1}},
      {7, 1, {4, 1}},
      {7, 2, {3, 6, 1}},
      {7, 3, {4, 0, 6, 1}},
      {7, 4, {3, 4, 5, 0, 1}},
      {7, 5, {4, 1, 0, 0, 0, 1}},
      {7, 6, {3, 6, 4, 5, 1, 0, 1}},
      {11, 1, {9, 1}},
      {11, 2, {2, 7, 1}},
      {11, 3, {9, 2, 0, 1}},
      {11, 4, {2, 10, 8, 0, 1}},
      {11, 5, {9, 0, 10, 0, 0, 1}},
      {11, 6, {2, 7, 6, 4, 3, 0, 1}},
  };
  return table;
}

}  // namespace

bool FieldElement::is_zero() const {
  return std::all_of(c_.begin(), c_.begin() + degree_, [](std::uint16_t v) { return v == 0; });
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

bool is_irreducible(Fp p, std::span<const Fp> monic) {
  Poly f(monic.begin(), monic.end());
  const int n = deg(f);
  if (n < 1) return false;
  if (n == 1) return true;
  if (f[0] == 0) return false;
  if (n <= 3) {
    for (Fp a = 0; a < p; ++a) {
      std::uint64_t acc = 0;
      for (int k = n; k >= 0; --k) acc = (acc * a + f[k]) % p;
      if (acc == 0) return false;
    }
    return true;
  }
  // f is irreducible iff gcd(x^{p^d} - x, f) = 1 for every d <= n/2.
  Poly h{0, 1};
  for (int d = 1; d <= n / 2; ++d) {
    h = poly_powmod(h, p, f, p);
    Poly diff = h;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = static_cast<Fp>((diff[1] + p - 1) % p);
    trim(diff);
    if (diff.empty()) return false;
    if (deg(poly_gcd(f, diff, p)) > 0) return false;
  }
  return true;
}

std::optional<std::vector<Fp>> conway_polynomial(Fp p, unsigned e) {
  for (const auto& entry : conway_table()) {
    if (entry.p == p && entry.e == e) return entry.coeffs;
  }
  return std::nullopt;
}

std::vector<Fp> default_modulus(Fp p, unsigned e) {
  if (auto c = conway_polynomial(p, e)) return *c;
  // Lexicographic over (c_0, c_1, ..., c_{e-1}): c_0 is the slowest digit.
  std::vector<Fp> f(e + 1, 0);
  f[e] = 1;
  std::uint64_t count = 1;
  for (unsigned i = 0; i < e; ++i) count *= p;
  for (std::uint64_t n = 0; n < count; ++n) {
    std::uint64_t v = n;
    for (unsigned i = e; i-- > 0;) {
      f[i] = static_cast<Fp>(v % p);
      v /= p;
    }
    if (is_irreducible(p, f)) return f;
  }
  throw Error(ErrorCode::reducible_modulus, "no irreducible polynomial found");
}

Field::Field(Fp p, unsigned e, std::optional<std::vector<Fp>> modulus) : p_(p), e_(e) {
  if (!is_prime(p)) throw Error(ErrorCode::non_prime, "p must be prime (got " + std::to_string(p) + ")");
  if (p >= kMaxPrime) throw Error(ErrorCode::invalid_argument, "p must be below 2^15");
  if (e == 0) throw Error(ErrorCode::invalid_argument, "e must be positive");
  if (e > kMaxDegree) throw Error(ErrorCode::invalid_argument, "e too large");
  q_ = 1;
  for (unsigned i = 0; i < e; ++i) {
    q_ *= p;
    if (q_ > kMaxOrder) throw Error(ErrorCode::invalid_argument, "field order exceeds 2^24");
  }

  if (modulus) {
    if (modulus->size() != e + 1 || modulus->back() == 0) {
      throw Error(ErrorCode::degree_mismatch,
                  "modulus must have degree " + std::to_string(e) + " (" + std::to_string(e + 1) + " coefficients)");
    }
    for (Fp c : *modulus) {
      if (c >= p) throw Error(ErrorCode::invalid_argument, "modulus coefficient out of range [0, p)");
    }
    if (modulus->back() != 1) throw Error(ErrorCode::invalid_argument, "modulus must be monic");
    if (!is_irreducible(p, *modulus)) throw Error(ErrorCode::reducible_modulus, "modulus is reducible over F_p");
    modulus_ = std::move(*modulus);
  } else {
    modulus_ = default_modulus(p, e);
  }
  id_ = fingerprint(p_, e_, modulus_);

  // Frobenius matrix: column j holds (t^j)^p, computed by square-and-multiply.
  frob_.assign(static_cast<std::size_t>(e_) * e_, 0);
  for (unsigned j = 0; j < e_; ++j) {
    const FieldElement img = pow(basis(j), p_);
    for (unsigned i = 0; i < e_; ++i) frob_[j * e_ + i] = img.c_[i];
  }

  // Trace of each basis element straight from the definition; trace() then
  // uses linearity.
  basis_trace_.assign(e_, 0);
  for (unsigned j = 0; j < e_; ++j) {
    FieldElement x = basis(j);
    FieldElement acc = zero();
    for (unsigned i = 0; i < e_; ++i) {
      acc = add(acc, x);
      x = frobenius(x);
    }
    basis_trace_[j] = acc.c_[0];
  }
  dual_ = dual_basis_of(*this);
}

void Field::check(const FieldElement& x) const {
  if (x.field_id_ != id_) throw Error(ErrorCode::field_mismatch, "element does not belong to this field");
}

FieldElement Field::blank() const {
  FieldElement r;
  r.field_id_ = id_;
  r.degree_ = static_cast<std::uint8_t>(e_);
  return r;
}

FieldElement Field::zero() const { return blank(); }

FieldElement Field::one() const { return from_fp(1); }

FieldElement Field::from_fp(std::uint64_t a) const {
  FieldElement r = blank();
  r.c_[0] = static_cast<std::uint16_t>(a % p_);
  return r;
}

FieldElement Field::from_coeffs(std::span<const Fp> coeffs) const {
  if (coeffs.size() > e_) throw Error(ErrorCode::degree_mismatch, "too many coordinates for this field");
  FieldElement r = blank();
  for (std::size_t i = 0; i < coeffs.size(); ++i) r.c_[i] = static_cast<std::uint16_t>(coeffs[i] % p_);
  return r;
}

FieldElement Field::element(std::uint64_t index) const {
  if (index >= q_) throw Error(ErrorCode::out_of_range, "element index out of range");
  FieldElement r = blank();
  for (unsigned i = 0; i < e_; ++i) {
    r.c_[i] = static_cast<std::uint16_t>(index % p_);
    index /= p_;
  }
  return r;
}

std::uint64_t Field::index(const FieldElement& x) const {
  check(x);
  std::uint64_t idx = 0;
  for (unsigned i = e_; i-- > 0;) idx = idx * p_ + x.c_[i];
  return idx;
}

FieldElement Field::basis(unsigned i) const {
  if (i >= e_) throw Error(ErrorCode::out_of_range, "basis index out of range");
  FieldElement r = blank();
  r.c_[i] = 1;
  return r;
}

FieldElement Field::add(const FieldElement& a, const FieldElement& b) const {
  check(a);
  check(b);
  FieldElement r = blank();
  for (unsigned i = 0; i < e_; ++i) {
    const Fp s = static_cast<Fp>(a.c_[i]) + b.c_[i];
    r.c_[i] = static_cast<std::uint16_t>(s >= p_ ? s - p_ : s);
  }
  return r;
}

FieldElement Field::sub(const FieldElement& a, const FieldElement& b) const {
  check(a);
  check(b);
  FieldElement r = blank();
  for (unsigned i = 0; i < e_; ++i) {
    const Fp s = static_cast<Fp>(a.c_[i]) + p_ - b.c_[i];
    r.c_[i] = static_cast<std::uint16_t>(s >= p_ ? s - p_ : s);
  }
  return r;
}

FieldElement Field::neg(const FieldElement& a) const { return sub(zero(), a); }

FieldElement Field::scale(const FieldElement& x, Fp a) const {
  check(x);
  FieldElement r = blank();
  a %= p_;
  for (unsigned i = 0; i < e_; ++i) r.c_[i] = static_cast<std::uint16_t>(mulmod_p(x.c_[i], a, p_));
  return r;
}

FieldElement Field::mul(const FieldElement& a, const FieldElement& b) const {
  check(a);
  check(b);
  std::array<std::uint64_t, 2 * kMaxDegree> acc{};
  for (unsigned i = 0; i < e_; ++i) {
    if (a.c_[i] == 0) continue;
    for (unsigned j = 0; j < e_; ++j) acc[i + j] += static_cast<std::uint64_t>(a.c_[i]) * b.c_[j];
  }
  const unsigned top = 2 * e_ - 1;
  for (unsigned d = 0; d < top; ++d) acc[d] %= p_;
  for (unsigned d = top; d-- > e_;) {
    const std::uint64_t c = acc[d];
    if (c == 0) continue;
    for (unsigned k = 0; k < e_; ++k) acc[d - e_ + k] = (acc[d - e_ + k] + (p_ - c) * modulus_[k]) % p_;
  }
  FieldElement r = blank();
  for (unsigned i = 0; i < e_; ++i) r.c_[i] = static_cast<std::uint16_t>(acc[i]);
  return r;
}

FieldElement Field::pow(const FieldElement& a, std::uint64_t k) const {
  check(a);
  FieldElement result = one();
  FieldElement base = a;
  while (k != 0) {
    if (k & 1) result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

FieldElement Field::inv(const FieldElement& a) const {
  check(a);
  if (a.is_zero()) throw Error(ErrorCode::division_by_zero, "inverse of zero");
  return pow(a, q_ - 2);
}

FieldElement Field::div(const FieldElement& a, const FieldElement& b) const { return mul(a, inv(b)); }

FieldElement Field::frobenius(const FieldElement& a, unsigned times) const {
  check(a);
  times %= e_;
  FieldElement x = a;
  for (unsigned t = 0; t < times; ++t) {
    std::array<std::uint64_t, kMaxDegree> acc{};
    for (unsigned j = 0; j < e_; ++j) {
      if (x.c_[j] == 0) continue;
      for (unsigned i = 0; i < e_; ++i) acc[i] += static_cast<std::uint64_t>(x.c_[j]) * frob_[j * e_ + i];
    }
    for (unsigned i = 0; i < e_; ++i) x.c_[i] = static_cast<std::uint16_t>(acc[i] % p_);
  }
  return x;
}

Fp Field::trace(const FieldElement& a) const {
  check(a);
  std::uint64_t acc = 0;
  for (unsigned j = 0; j < e_; ++j) acc += static_cast<std::uint64_t>(a.c_[j]) * basis_trace_[j];
  return static_cast<Fp>(acc % p_);
}

Fp abs_trace(const Field& field, const FieldElement& x) { return field.trace(x); }

std::vector<FieldElement> dual_basis_of(const Field& field) {
  const unsigned e = field.degree();
  const Fp p = field.characteristic();
  FpMatrix gram(e, e, p);
  for (unsigned i = 0; i < e; ++i) {
    for (unsigned j = 0; j < e; ++j) gram.set(i, j, field.trace(field.mul(field.basis(i), field.basis(j))));
  }
  const auto inverse = fp_inverse(gram);
  if (!inverse) throw Error(ErrorCode::solve_failed, "trace form is degenerate");
  std::vector<FieldElement> dual;
  dual.reserve(e);
  for (unsigned j = 0; j < e; ++j) {
    FieldElement d = field.zero();
    for (unsigned k = 0; k < e; ++k) d = field.add(d, field.scale(field.basis(k), (*inverse)(k, j)));
    dual.push_back(d);
  }
  return dual;
}

}  // namespace wenger

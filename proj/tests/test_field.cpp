#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "wenger/error.hpp"
#include "wenger/field.hpp"
#include "wenger/linalg.hpp"

using namespace wenger;

namespace {

using Poly = std::vector<Fp>;

// Schoolbook product reduced by the modulus, coefficients low degree first.
Poly naive_mul(const Poly& a, const Poly& b, const Poly& mod, Fp p) {
  Poly prod(a.size() + b.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
  }
  const std::size_t e = mod.size() - 1;
  for (std::size_t d = prod.size(); d-- > e;) {
    const Fp c = prod[d];
    if (c == 0) continue;
    for (std::size_t k = 0; k <= e; ++k) prod[d - e + k] = (prod[d - e + k] + (p - c) * mod[k]) % p;
  }
  prod.resize(e);
  return prod;
}

Poly coeffs_of(const FieldElement& x) { return Poly(x.coeffs().begin(), x.coeffs().end()); }

// Remainder of a modulo monic b.
Poly poly_mod(Poly a, const Poly& b, Fp p) {
  const std::size_t db = b.size() - 1;
  for (std::size_t d = a.size(); d-- > db;) {
    const Fp c = a[d] % p;
    if (c == 0) continue;
    for (std::size_t k = 0; k <= db; ++k) a[d - db + k] = (a[d - db + k] + (p - c) * b[k]) % p;
  }
  a.resize(db);
  return a;
}

bool is_zero_poly(const Poly& a) {
  for (Fp c : a) {
    if (c != 0) return false;
  }
  return true;
}

// All monic polynomials of degree d, low degree first.
std::vector<Poly> monic_polys(Fp p, unsigned d) {
  std::vector<Poly> out;
  std::uint64_t total = 1;
  for (unsigned i = 0; i < d; ++i) total *= p;
  for (std::uint64_t code = 0; code < total; ++code) {
    Poly f(d + 1, 0);
    std::uint64_t x = code;
    for (unsigned i = 0; i < d; ++i) {
      f[i] = static_cast<Fp>(x % p);
      x /= p;
    }
    f[d] = 1;
    out.push_back(f);
  }
  return out;
}

// Trial division by every monic polynomial of degree 1..deg/2.
bool brute_irreducible(const Poly& f, Fp p) {
  const unsigned deg = static_cast<unsigned>(f.size() - 1);
  for (unsigned d = 1; d <= deg / 2; ++d) {
    for (const auto& g : monic_polys(p, d)) {
      if (is_zero_poly(poly_mod(f, g, p))) return false;
    }
  }
  return true;
}

const std::vector<std::pair<Fp, unsigned>> kSmallFields = {{2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}, {2, 3},
                                                           {3, 2}, {2, 4}, {5, 2}, {3, 3}, {7, 2}, {3, 4}};

}  // namespace

TEST_CASE("field construction examples") {
  const Field f2(2, 1);
  CHECK(f2.order() == 2);
  CHECK(f2.modulus().size() == 2);
  CHECK(f2.modulus().back() == 1);

  const Field f4(2, 2, Poly{1, 1, 1});
  CHECK(f4.order() == 4);

  try {
    Field bad(2, 2, Poly{1, 0, 1});
    FAIL("t^2+1 accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::reducible_modulus);
  }
}

TEST_CASE("construction errors") {
  auto code_of = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::io_error;
  };
  CHECK(code_of([] { Field f(4, 1); }) == ErrorCode::non_prime);
  CHECK(code_of([] { Field f(1, 1); }) == ErrorCode::non_prime);
  CHECK(code_of([] { Field f(2, 2, Poly{1, 1}); }) == ErrorCode::degree_mismatch);
  CHECK(code_of([] { Field f(2, 2, Poly{1, 1, 0}); }) == ErrorCode::degree_mismatch);
  CHECK(code_of([] { Field f(3, 2, Poly{1, 0, 2}); }) == ErrorCode::invalid_argument);
  CHECK(code_of([] { Field f(2, 30); }) == ErrorCode::invalid_argument);
  CHECK(code_of([] { Field f(32771, 1); }) == ErrorCode::invalid_argument);
}

TEST_CASE("arithmetic examples") {
  const Field f4(2, 2, Poly{1, 1, 1});
  const FieldElement t = f4.basis(1);
  CHECK(f4.mul(t, t) == f4.add(t, f4.one()));

  const Field f3(3, 1);
  CHECK(f3.inv(f3.from_fp(2)) == f3.from_fp(2));

  for (std::uint64_t i = 0; i < f4.order(); ++i) CHECK(f4.mul(f4.element(i), f4.one()) == f4.element(i));

  try {
    (void)f3.inv(f3.zero());
    FAIL("inverse of zero");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::division_by_zero);
  }
  try {
    (void)f3.add(f3.one(), f4.one());
    FAIL("mixed fields");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::field_mismatch);
  }
  CHECK_FALSE(f3.contains(FieldElement{}));
}

TEST_CASE("multiplication agrees with schoolbook reduction") {
  for (const auto& [p, e] : kSmallFields) {
    const Field f(p, e);
    if (f.order() > 81) continue;
    for (std::uint64_t i = 0; i < f.order(); ++i) {
      for (std::uint64_t j = 0; j < f.order(); ++j) {
        const FieldElement a = f.element(i);
        const FieldElement b = f.element(j);
        CHECK(coeffs_of(f.mul(a, b)) == naive_mul(coeffs_of(a), coeffs_of(b), f.modulus(), p));
      }
    }
  }
  // Sampled pairs in a larger field with a non-default modulus.
  const Field f(3, 5, Poly{1, 2, 0, 0, 0, 1});
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::uint64_t> pick(0, f.order() - 1);
  for (int n = 0; n < 2000; ++n) {
    const FieldElement a = f.element(pick(rng));
    const FieldElement b = f.element(pick(rng));
    CHECK(coeffs_of(f.mul(a, b)) == naive_mul(coeffs_of(a), coeffs_of(b), f.modulus(), 3));
  }
}

TEST_CASE("element index order and round trip") {
  const Field f(3, 2);
  CHECK(f.index(f.zero()) == 0);
  CHECK(f.index(f.one()) == 1);
  CHECK(f.index(f.basis(1)) == 3);
  for (std::uint64_t i = 0; i < f.order(); ++i) CHECK(f.index(f.element(i)) == i);
  CHECK_THROWS_AS((void)f.element(9), Error);
}

TEST_CASE("trace examples") {
  const Field f4(2, 2, Poly{1, 1, 1});
  CHECK(f4.trace(f4.zero()) == 0);
  CHECK(f4.trace(f4.one()) == 0);
  CHECK(f4.trace(f4.basis(1)) == 1);
}

TEST_CASE("trace from basis traces agrees with the Frobenius sum") {
  for (const auto& [p, e] : kSmallFields) {
    const Field f(p, e);
    for (std::uint64_t i = 0; i < f.order(); ++i) {
      const FieldElement x = f.element(i);
      // Frobenius sum computed with pow rather than the stored matrix.
      FieldElement sum = f.zero();
      FieldElement y = x;
      for (unsigned k = 0; k < e; ++k) {
        sum = f.add(sum, y);
        y = f.pow(y, p);
      }
      for (unsigned c = 1; c < e; ++c) REQUIRE(sum.coeff(c) == 0);
      CHECK(f.trace(x) == sum.coeff(0));
      CHECK(abs_trace(f, x) == sum.coeff(0));
    }
  }
}

TEST_CASE("trace is F_p-linear and surjective") {
  for (const auto& [p, e] : kSmallFields) {
    const Field f(p, e);
    std::vector<bool> hit(p, false);
    for (std::uint64_t i = 0; i < f.order(); ++i) {
      const FieldElement x = f.element(i);
      hit[f.trace(x)] = true;
      const FieldElement y = f.element((i * 7 + 3) % f.order());
      CHECK(f.trace(f.add(x, y)) == (f.trace(x) + f.trace(y)) % p);
      CHECK(f.trace(f.scale(x, p - 1)) == (p - f.trace(x)) % p);
    }
    for (bool h : hit) CHECK(h);
  }
}

TEST_CASE("dual basis of GF(4)") {
  const Field f4(2, 2, Poly{1, 1, 1});
  const FieldElement t = f4.basis(1);
  // Gram matrix T_ij = tr(t^i t^j) = [[0,1],[1,1]]; its inverse over F_2 is
  // [[1,1],[1,0]], so delta_0 = 1 + t and delta_1 = 1.
  CHECK(f4.trace(f4.mul(f4.one(), f4.one())) == 0);
  CHECK(f4.trace(f4.mul(f4.one(), t)) == 1);
  CHECK(f4.trace(f4.mul(t, t)) == 1);
  const auto& dual = f4.dual_basis();
  REQUIRE(dual.size() == 2);
  CHECK(dual[0] == f4.add(t, f4.one()));
  CHECK(dual[1] == f4.one());
  for (unsigned i = 0; i < 2; ++i) {
    for (unsigned j = 0; j < 2; ++j) CHECK(f4.trace(f4.mul(f4.basis(i), dual[j])) == (i == j ? 1u : 0u));
  }
}

TEST_CASE("dual basis identities for every GF(9) modulus") {
  int moduli = 0;
  for (const auto& mod : monic_polys(3, 2)) {
    if (!brute_irreducible(mod, 3)) continue;
    ++moduli;
    const Field f(3, 2, mod);
    const auto dual = dual_basis_of(f);
    for (unsigned i = 0; i < 2; ++i) {
      for (unsigned j = 0; j < 2; ++j) CHECK(f.trace(f.mul(f.basis(i), dual[j])) == (i == j ? 1u : 0u));
    }
  }
  CHECK(moduli == 3);
  const Field f2(2, 1);
  CHECK(f2.dual_basis().at(0) == f2.one());
}

TEST_CASE("field invariants exhaustively for q <= 81") {
  for (const auto& [p, e] : kSmallFields) {
    const Field f(p, e);
    CAPTURE(p);
    CAPTURE(e);
    for (std::uint64_t i = 0; i < f.order(); ++i) {
      const FieldElement x = f.element(i);
      if (!x.is_zero()) {
        CHECK(f.pow(x, f.order() - 1) == f.one());
        CHECK(f.mul(x, f.inv(x)) == f.one());
      }
      CHECK(f.frobenius(x) == f.pow(x, p));
      CHECK(f.frobenius(x, e) == x);
      CHECK(f.trace(f.frobenius(x)) == f.trace(x));
      // x = sum_i tr(delta_i x) t^i.
      FieldElement back = f.zero();
      for (unsigned k = 0; k < e; ++k) back = f.add(back, f.scale(f.basis(k), f.trace(f.mul(f.dual_basis()[k], x))));
      CHECK(back == x);
      for (std::uint64_t j = 0; j < f.order(); j += 1 + f.order() / 17) {
        const FieldElement y = f.element(j);
        CHECK(f.frobenius(f.add(x, y)) == f.add(f.frobenius(x), f.frobenius(y)));
        CHECK(f.sub(f.add(x, y), y) == x);
        if (!y.is_zero()) CHECK(f.mul(f.div(x, y), y) == x);
      }
    }
  }
}

TEST_CASE("irreducibility test agrees with trial division") {
  for (const auto& [p, d] : std::vector<std::pair<Fp, unsigned>>{{2, 2}, {2, 3}, {2, 4}, {2, 5}, {2, 6}, {3, 2},
                                                                   {3, 3}, {3, 4}, {5, 2}, {5, 3}, {5, 4}}) {
    for (const auto& f : monic_polys(p, d)) CHECK(is_irreducible(p, f) == brute_irreducible(f, p));
  }
}

TEST_CASE("default modulus") {
  // Conway polynomials are irreducible and the table is used inside its range.
  for (Fp p : {2u, 3u, 5u, 7u, 11u}) {
    for (unsigned e = 1; e <= 6; ++e) {
      const auto c = conway_polynomial(p, e);
      REQUIRE(c.has_value());
      CHECK(c->size() == e + 1);
      CHECK(c->back() == 1);
      CHECK(brute_irreducible(*c, p));
      CHECK(default_modulus(p, e) == *c);
    }
  }
  CHECK(default_modulus(2, 2) == Poly{1, 1, 1});
  CHECK(default_modulus(3, 2) == Poly{2, 2, 1});

  // Outside the table: the first irreducible with c_0 compared first.
  for (const auto& [p, e] : std::vector<std::pair<Fp, unsigned>>{{13, 2}, {13, 3}, {2, 7}, {17, 2}}) {
    CHECK_FALSE(conway_polynomial(p, e).has_value());
    std::vector<Poly> cands = monic_polys(p, e);
    std::sort(cands.begin(), cands.end());
    Poly first;
    for (const auto& f : cands) {
      if (brute_irreducible(f, p)) {
        first = f;
        break;
      }
    }
    CHECK(default_modulus(p, e) == first);
  }
}

TEST_CASE("fp_rank_kernel examples") {
  const FpMatrix zero(2, 2, 2);
  CHECK(fp_rank_kernel(zero).rank == 0);
  CHECK(fp_rank_kernel(zero).kernel_basis.size() == 2);

  const auto id = FpMatrix::identity(4, 5);
  CHECK(fp_rank_kernel(id).rank == 4);
  CHECK(fp_rank_kernel(id).kernel_basis.empty());

  FpMatrix ones(2, 2, 2);
  for (unsigned r = 0; r < 2; ++r) {
    for (unsigned c = 0; c < 2; ++c) ones.set(r, c, 1);
  }
  const auto rk = fp_rank_kernel(ones);
  CHECK(rk.rank == 1);
  REQUIRE(rk.kernel_basis.size() == 1);
  CHECK(rk.kernel_basis[0] == std::vector<Fp>{1, 1});
}

TEST_CASE("rank-nullity and kernel annihilation on random matrices") {
  std::mt19937_64 rng(11);
  for (Fp p : {2u, 3u, 5u, 7u}) {
    for (int n = 0; n < 200; ++n) {
      const std::size_t rows = 1 + rng() % 5;
      const std::size_t cols = 1 + rng() % 5;
      FpMatrix m(rows, cols, p);
      for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rng() % (n % 3 == 0 ? 2 : p));
      }
      const auto rk = fp_rank_kernel(m);
      CHECK(rk.rank + rk.kernel_basis.size() == cols);
      for (const auto& v : rk.kernel_basis) {
        for (std::size_t r = 0; r < rows; ++r) {
          std::uint64_t acc = 0;
          for (std::size_t c = 0; c < cols; ++c) acc += std::uint64_t{m(r, c)} * v[c];
          CHECK(acc % p == 0);
        }
      }
      FpMatrix k(cols, rk.kernel_basis.size(), p);
      for (std::size_t j = 0; j < rk.kernel_basis.size(); ++j) {
        for (std::size_t i = 0; i < cols; ++i) k.set(i, j, rk.kernel_basis[j][i]);
      }
      if (!rk.kernel_basis.empty()) CHECK(fp_rank_kernel(k).rank == rk.kernel_basis.size());

      // A right-hand side in the column space is always solvable.
      std::vector<Fp> x(cols);
      for (auto& v : x) v = static_cast<Fp>(rng() % p);
      std::vector<Fp> b(rows, 0);
      for (std::size_t r = 0; r < rows; ++r) {
        std::uint64_t acc = 0;
        for (std::size_t c = 0; c < cols; ++c) acc += std::uint64_t{m(r, c)} * x[c];
        b[r] = static_cast<Fp>(acc % p);
      }
      const auto sol = fp_solve(m, b);
      REQUIRE(sol.has_value());
      for (std::size_t r = 0; r < rows; ++r) {
        std::uint64_t acc = 0;
        for (std::size_t c = 0; c < cols; ++c) acc += std::uint64_t{m(r, c)} * (*sol)[c];
        CHECK(acc % p == b[r]);
      }
    }
  }
}

TEST_CASE("fp_solve reports inconsistency and fp_inverse inverts") {
  FpMatrix m(2, 2, 3);
  m.set(0, 0, 1);
  m.set(0, 1, 2);
  m.set(1, 0, 2);
  m.set(1, 1, 1);
  // Rows are proportional (second = 2 * first), so b must satisfy b1 = 2 b0.
  CHECK_FALSE(fp_solve(m, std::vector<Fp>{1, 1}).has_value());
  CHECK(fp_solve(m, std::vector<Fp>{1, 2}).has_value());
  CHECK_FALSE(fp_inverse(m).has_value());

  FpMatrix a(2, 2, 5);
  a.set(0, 0, 2);
  a.set(0, 1, 1);
  a.set(1, 0, 1);
  a.set(1, 1, 4);
  const auto inv = fp_inverse(a);
  REQUIRE(inv.has_value());
  for (unsigned r = 0; r < 2; ++r) {
    for (unsigned c = 0; c < 2; ++c) {
      std::uint64_t acc = 0;
      for (unsigned k = 0; k < 2; ++k) acc += std::uint64_t{a(r, k)} * (*inv)(k, c);
      CHECK(acc % 5 == (r == c ? 1u : 0u));
    }
  }
  CHECK(fp_inv(3, 7) == 5);
}

TEST_CASE("is_prime") {
  const std::vector<std::uint64_t> primes = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47};
  for (std::uint64_t n = 0; n < 50; ++n) {
    CHECK(is_prime(n) == (std::find(primes.begin(), primes.end(), n) != primes.end()));
  }
  CHECK(is_prime(32749));
  CHECK_FALSE(is_prime(32761));
}

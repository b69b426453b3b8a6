#include "wenger/linalg.hpp"

#include <utility>

#include "wenger/error.hpp"

namespace wenger {

FpMatrix::FpMatrix(std::size_t rows, std::size_t cols, Fp p) : rows_(rows), cols_(cols), p_(p), data_(rows * cols, 0) {}

FpMatrix FpMatrix::identity(std::size_t n, Fp p) {
  FpMatrix m(n, n, p);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

Fp fp_inv(Fp a, Fp p) {
  if (a % p == 0) throw Error(ErrorCode::division_by_zero, "inverse of zero in F_p");
  // Extended Euclid on (a, p).
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p, new_r = a % p;
  while (new_r != 0) {
    const std::int64_t quotient = r / new_r;
    t = std::exchange(new_t, t - quotient * new_t);
    r = std::exchange(new_r, r - quotient * new_r);
  }
  if (t < 0) t += p;
  return static_cast<Fp>(t);
}

FpMatrix fp_rref(FpMatrix m, std::vector<std::size_t>* pivot_cols) {
  const Fp p = m.prime();
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows() && m(pivot, col) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != row) {
      for (std::size_t c = 0; c < m.cols(); ++c) {
        const Fp tmp = m(row, c);
        m.set(row, c, m(pivot, c));
        m.set(pivot, c, tmp);
      }
    }
    const Fp scale = fp_inv(m(row, col), p);
    for (std::size_t c = 0; c < m.cols(); ++c) m.set(row, c, static_cast<std::uint64_t>(m(row, c)) * scale);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row) continue;
      const Fp factor = m(r, col);
      if (factor == 0) continue;
      for (std::size_t c = 0; c < m.cols(); ++c) {
        m.set(r, c, m(r, c) + static_cast<std::uint64_t>(p - factor) * m(row, c));
      }
    }
    pivots.push_back(col);
    ++row;
  }
  if (pivot_cols) *pivot_cols = std::move(pivots);
  return m;
}

RankKernel fp_rank_kernel(const FpMatrix& m) {
  std::vector<std::size_t> pivots;
  const FpMatrix r = fp_rref(m, &pivots);
  const Fp p = m.prime();

  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : pivots) is_pivot[c] = true;

  RankKernel out;
  out.rank = pivots.size();
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Fp> v(m.cols(), 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      v[pivots[i]] = static_cast<Fp>((p - r(i, free)) % p);
    }
    out.kernel_basis.push_back(std::move(v));
  }
  return out;
}

std::optional<std::vector<Fp>> fp_solve(const FpMatrix& m, std::span<const Fp> b) {
  if (b.size() != m.rows()) throw Error(ErrorCode::invalid_argument, "right-hand side has wrong length");
  FpMatrix aug(m.rows(), m.cols() + 1, m.prime());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug.set(r, c, m(r, c));
    aug.set(r, m.cols(), b[r]);
  }
  std::vector<std::size_t> pivots;
  const FpMatrix red = fp_rref(std::move(aug), &pivots);
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  std::vector<Fp> x(m.cols(), 0);
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = red(i, m.cols());
  return x;
}

std::optional<FpMatrix> fp_inverse(const FpMatrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::invalid_argument, "inverse of a non-square matrix");
  const std::size_t n = m.rows();
  FpMatrix aug(n, 2 * n, m.prime());
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug.set(r, c, m(r, c));
    aug.set(r, n + r, 1);
  }
  std::vector<std::size_t> pivots;
  const FpMatrix red = fp_rref(std::move(aug), &pivots);
  if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
  FpMatrix inv(n, n, m.prime());
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) inv.set(r, c, red(r, n + c));
  }
  return inv;
}

namespace {

// Forward elimination over F_q in place; returns the pivot columns.
std::vector<std::size_t> fq_eliminate(const Field& f, std::vector<std::vector<FieldElement>>& rows, std::size_t cols,
                                      bool reduce_above) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows.size(); ++col) {
    std::size_t pivot = row;
    while (pivot < rows.size() && rows[pivot][col].is_zero()) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[row], rows[pivot]);
    const FieldElement scale = f.inv(rows[row][col]);
    for (auto& v : rows[row]) v = f.mul(v, scale);
    for (std::size_t r = reduce_above ? 0 : row + 1; r < rows.size(); ++r) {
      if (r == row || rows[r][col].is_zero()) continue;
      const FieldElement factor = rows[r][col];
      for (std::size_t c = 0; c < rows[r].size(); ++c) rows[r][c] = f.sub(rows[r][c], f.mul(factor, rows[row][c]));
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::size_t fq_rank(const Field& field, std::vector<std::vector<FieldElement>> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  for (const auto& r : rows) {
    if (r.size() != cols) throw Error(ErrorCode::invalid_argument, "ragged matrix");
  }
  return fq_eliminate(field, rows, cols, false).size();
}

std::optional<std::vector<FieldElement>> fq_solve_unique(const Field& field,
                                                         std::vector<std::vector<FieldElement>> a,
                                                         std::vector<FieldElement> b) {
  const std::size_t n = a.size();
  if (b.size() != n) throw Error(ErrorCode::invalid_argument, "right-hand side has wrong length");
  for (std::size_t r = 0; r < n; ++r) {
    if (a[r].size() != n) throw Error(ErrorCode::invalid_argument, "system is not square");
    a[r].push_back(b[r]);
  }
  const auto pivots = fq_eliminate(field, a, n, true);
  if (pivots.size() < n) return std::nullopt;
  std::vector<FieldElement> x(n);
  for (std::size_t r = 0; r < n; ++r) x[r] = a[r][n];
  return x;
}

}  // namespace wenger

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "wenger/field.hpp"

namespace wenger {

/// Dense row-major matrix over F_p.
class FpMatrix {
 public:
  FpMatrix(std::size_t rows, std::size_t cols, Fp p);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Fp prime() const { return p_; }

  Fp operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  /// Stores v mod p.
  void set(std::size_t r, std::size_t c, std::uint64_t v) { data_[r * cols_ + c] = static_cast<Fp>(v % p_); }

  static FpMatrix identity(std::size_t n, Fp p);

 private:
  std::size_t rows_;
  std::size_t cols_;
  Fp p_;
  std::vector<Fp> data_;
};

struct RankKernel {
  std::size_t rank = 0;
  /// Linearly independent vectors spanning {x : Mx = 0}, one per free column.
  std::vector<std::vector<Fp>> kernel_basis;
};

Fp fp_inv(Fp a, Fp p);

/// Reduced row-echelon form; deterministic pivot order (leftmost column,
/// topmost nonzero row).
FpMatrix fp_rref(FpMatrix m, std::vector<std::size_t>* pivot_cols = nullptr);

RankKernel fp_rank_kernel(const FpMatrix& m);

/// Some solution of Mx = b (free variables set to zero), or nullopt when
/// the system is inconsistent.
std::optional<std::vector<Fp>> fp_solve(const FpMatrix& m, std::span<const Fp> b);

std::optional<FpMatrix> fp_inverse(const FpMatrix& m);

/// Rank over F_q of a list of row vectors.
std::size_t fq_rank(const Field& field, std::vector<std::vector<FieldElement>> rows);

/// Unique solution of the square system Ax = b over F_q; nullopt if A is
/// singular.
std::optional<std::vector<FieldElement>> fq_solve_unique(const Field& field,
                                                         std::vector<std::vector<FieldElement>> a,
                                                         std::vector<FieldElement> b);

}  // namespace wenger

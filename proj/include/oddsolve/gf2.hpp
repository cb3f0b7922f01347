#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "oddsolve/bitvec.hpp"

namespace oddsolve::gf2 {

/// Dense bit-packed matrix over GF(2); rows share a common width.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, BitVec(cols)) {}
  static Matrix from_rows(std::size_t cols, std::vector<BitVec> rows);
  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }

  const BitVec& row(std::size_t i) const { return rows_[i]; }
  BitVec& row(std::size_t i) { return rows_[i]; }
  bool get(std::size_t i, std::size_t j) const { return rows_[i].test(j); }
  void set(std::size_t i, std::size_t j, bool v = true) { rows_[i].set(j, v); }
  void append_row(BitVec r);

  Matrix transpose() const;
  /// a · x
  BitVec multiply(const BitVec& x) const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t cols_ = 0;
  std::vector<BitVec> rows_;
};

/// Result of Gauss-Jordan elimination that remembers which original rows
/// span the row space.
struct RrefDecomposition {
  /// rank() rows in reduced row-echelon form, ordered by pivot column.
  Matrix rref;
  std::vector<std::size_t> pivot_cols;
  /// Original rows forming a basis, ascending; earliest rows win.
  std::vector<std::size_t> basis_row_indices;
  /// combos[k] (width rank()) selects the basis rows whose XOR is rref row k.
  std::vector<BitVec> combos;

  std::size_t rank() const { return pivot_cols.size(); }
};

RrefDecomposition rref(const Matrix& m);
std::size_t rank(const Matrix& m);

/// One x with a·x = b (free variables fixed to 0), or nullopt when the
/// system is inconsistent. Throws std::invalid_argument on shape mismatch.
std::optional<BitVec> solve(const Matrix& a, const BitVec& b);

/// Coefficients over basis_row_indices reproducing v, or nullopt when v is
/// outside the row space.
std::optional<BitVec> coordinates(const RrefDecomposition& d, const BitVec& v);

/// XOR of the basis rows of `m` selected by `coords`.
BitVec reconstruct(const Matrix& m, const RrefDecomposition& d, const BitVec& coords);

}  // namespace oddsolve::gf2

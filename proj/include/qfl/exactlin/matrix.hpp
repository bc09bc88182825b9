#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "qfl/exactlin/scalar.hpp"

namespace qfl::exactlin {

// A sparse row: (column, value) pairs, strictly increasing columns, no zeros.
using SparseRow = std::vector<std::pair<std::size_t, Scalar>>;

/// Sorts by column, merges duplicates and drops zeros.
SparseRow normalize_row(SparseRow row);

/// Sparse rational matrix stored row-wise. Absent entries are zero; stored
/// entries are never zero and always within bounds.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);

  static Matrix identity(std::size_t n);
  static Matrix from_dense(const std::vector<Vector>& rows, std::size_t cols);

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  std::size_t nonzeros() const;

  const SparseRow& row(std::size_t r) const { return rows_.at(r); }
  Scalar at(std::size_t r, std::size_t c) const;

  /// Replaces a whole row; the row is normalized first.
  void set_row(std::size_t r, SparseRow row);
  void set(std::size_t r, std::size_t c, const Scalar& value);
  void add_to(std::size_t r, std::size_t c, const Scalar& value);

  Matrix transpose() const;
  Vector apply(const Vector& x) const;
  std::vector<Vector> to_dense() const;

  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  void check_col(std::size_t c) const;

  std::vector<SparseRow> rows_;
  std::size_t cols_ = 0;
};

/// Rank over Q via fraction-free elimination.
std::size_t rank(const Matrix& m);

/// Basis of {x : m x = 0}, exactly cols - rank vectors. One vector per free
/// column of the reduced echelon form, free columns in increasing order; the
/// vector has a 1 at its free column and zeros at the other free columns.
std::vector<Vector> kernel_basis(const Matrix& m);

/// One solution of a x = b with free variables set to zero, or nullopt when
/// the system is inconsistent. Throws InputError if b.size() != a.rows().
std::optional<Vector> solve(const Matrix& a, const Vector& b);

/// Reduced row echelon basis of the row space of m (pivot entries 1, rows in
/// increasing pivot order).
std::vector<Vector> row_space_basis(const Matrix& m);

}  // namespace qfl::exactlin

#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qfl/exactlin/matrix.hpp"
#include "qfl/exactlin/scalar.hpp"

namespace qfl::liecore {

using exactlin::Matrix;
using exactlin::Scalar;
using exactlin::Vector;

// Sparse image of a bracket of two basis vectors: (k, c_ij^k), increasing k.
using Terms = std::vector<std::pair<std::size_t, Scalar>>;

/// Finite-dimensional algebra over Q given by structure constants
/// [e_i, e_j] = sum_k c_ij^k e_k. Only i < j is stored; antisymmetry is
/// structural. Whether the Jacobi identity holds is a separate question
/// (see jacobi_defect), so this type also models candidate tables.
class LieAlgebra {
 public:
  LieAlgebra() = default;
  /// Empty (abelian) algebra. Labels default to Y0..Y{n-1}.
  explicit LieAlgebra(std::size_t dim, std::vector<std::string> labels = {});

  std::size_t dim() const { return dim_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  void set_labels(std::vector<std::string> labels);

  /// c_ij^k += c. Accepts i > j (the sign is flipped); i == j is an error.
  void add_term(std::size_t i, std::size_t j, std::size_t k, const Scalar& c);

  /// Replaces [e_i, e_j] (i != j) with the given combination.
  void set_bracket(std::size_t i, std::size_t j, const Vector& value);

  /// [e_i, e_j] for any i, j, as sparse terms.
  const Terms& terms(std::size_t i, std::size_t j) const { return table_.at(i * dim_ + j); }
  Scalar coeff(std::size_t i, std::size_t j, std::size_t k) const;

  /// Stored entries, keyed by (i, j) with i < j; empty brackets omitted.
  std::map<std::pair<std::size_t, std::size_t>, Terms> brackets() const;
  std::size_t nonzero_brackets() const;

  /// ad(e_i) as an n x n matrix: column j holds [e_i, e_j].
  Matrix ad(std::size_t i) const;

  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
    return a.dim_ == b.dim_ && a.table_ == b.table_;
  }

 private:
  void check_index(std::size_t i) const;
  void put(std::size_t i, std::size_t j, Terms t);

  std::size_t dim_ = 0;
  std::vector<std::string> labels_;
  std::vector<Terms> table_;  // n*n, both orders, kept antisymmetric
};

std::vector<std::string> default_labels(std::size_t n, const std::string& prefix = "Y");

/// Bilinear extension of the structure table. Throws InputError on length
/// mismatch.
Vector bracket(const LieAlgebra& g, const Vector& x, const Vector& y);

/// The same algebra written in a new basis: new_basis[i] is the i-th new
/// basis vector in old coordinates. Throws InputError if it is not a basis.
LieAlgebra change_basis(const LieAlgebra& g, const std::vector<Vector>& new_basis,
                        std::vector<std::string> labels = {});

}  // namespace qfl::liecore

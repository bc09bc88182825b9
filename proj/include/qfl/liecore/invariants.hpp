#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "qfl/liecore/lie_algebra.hpp"

namespace qfl::liecore {

/// Subspace of Q^n kept in reduced row echelon form, so two subspaces are
/// equal exactly when their bases compare equal.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient = 0) : ambient_(ambient) {}
  static Subspace span(std::size_t ambient, const std::vector<Vector>& vectors);
  static Subspace whole(std::size_t ambient);

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Vector>& basis() const { return basis_; }
  bool contains(const Vector& v) const;
  bool contains(const Subspace& other) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  std::size_t ambient_;
  std::vector<Vector> basis_;
};

struct JacobiDefect {
  std::size_t i, j, k;  // i < j < k
  Vector defect;        // [[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j]
};

std::vector<JacobiDefect> jacobi_defect(const LieAlgebra& g);
bool is_lie_algebra(const LieAlgebra& g);

/// Throws PreconditionError naming the first defect triple.
void require_lie(const LieAlgebra& g, const char* what);

Subspace center(const LieAlgebra& g);

/// [U, V] as a subspace.
Subspace bracket_span(const LieAlgebra& g, const Subspace& u, const Subspace& v);

struct CentralSeries {
  // g_1 = g, g_{k+1} = [g_k, g]. Ends with the zero subspace for nilpotent
  // algebras; otherwise with the first term that repeats.
  std::vector<Subspace> terms;
  std::optional<std::size_t> nilindex;
};

CentralSeries lower_central_series(const LieAlgebra& g);

/// p_i = dim g_i - dim g_{i+1}, i = 1..nilindex.
std::vector<std::size_t> psequence(const CentralSeries& s);

/// dim g - dim [g, g].
std::size_t type_of(const LieAlgebra& g);

struct GradedAlgebra {
  std::vector<Subspace> pieces;     // W_1..W_m as subspaces of g
  std::vector<std::size_t> psequence;
  std::vector<Vector> basis;        // adapted basis in g-coordinates, degree order
  std::vector<std::size_t> degree;  // filtration degree of basis[i]
  LieAlgebra algebra;               // gr(g) on the adapted basis
};

GradedAlgebra associated_graded(const LieAlgebra& g);

}  // namespace qfl::liecore

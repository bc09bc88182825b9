#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "qfl/liecore/lie_algebra.hpp"

namespace qfl::cohomology {

using exactlin::Matrix;
using exactlin::Scalar;
using exactlin::Vector;
using liecore::LieAlgebra;

/// n * binomial(n, k). Throws InputError if k > n.
std::size_t cochain_dim(std::size_t n, std::size_t k);

/// Alternating 2-cochain with values in the adjoint module; only i < j is
/// stored, missing pairs are zero.
class Cochain2 {
 public:
  explicit Cochain2(std::shared_ptr<const LieAlgebra> algebra);

  const LieAlgebra& algebra() const { return *algebra_; }
  std::shared_ptr<const LieAlgebra> algebra_ptr() const { return algebra_; }

  /// Sets phi(e_i, e_j); i > j stores the negated value, i == j throws.
  void set(std::size_t i, std::size_t j, const Vector& value);
  Vector value(std::size_t i, std::size_t j) const;
  const std::map<std::pair<std::size_t, std::size_t>, Vector>& values() const { return values_; }

  /// Coordinates in C^2: index rank(i,j) * n + m, pairs in lexicographic order.
  Vector coordinates() const;
  static Cochain2 from_coordinates(std::shared_ptr<const LieAlgebra> algebra, const Vector& c);

 private:
  std::shared_ptr<const LieAlgebra> algebra_;
  std::map<std::pair<std::size_t, std::size_t>, Vector> values_;
};

struct ComplexSlice {
  std::size_t degree = 0;
  std::size_t dim_from = 0;  // dim C^k
  std::size_t dim_to = 0;    // dim C^{k+1}
  Matrix d;                  // dim_to x dim_from
};

/// d_k : C^k -> C^{k+1} for k in {0, 1, 2}. C^k is ordered by increasing
/// index tuple i_1 < ... < i_k (lexicographic), then target coordinate.
ComplexSlice differential_matrix(const LieAlgebra& g, std::size_t k);

/// dim C^k - rank d_k - rank d_{k-1}, k in {0, 1, 2}.
std::size_t cohomology_dim(const LieAlgebra& g, std::size_t k);

bool is_cocycle(const Cochain2& c);

/// d_1 applied to a 1-cochain given as an n x n matrix (column b = phi(e_b)).
Cochain2 coboundary(std::shared_ptr<const LieAlgebra> g, const Matrix& phi);

/// dim of span(cocycles) modulo B^2. Throws PreconditionError if an input is
/// not a cocycle or belongs to another algebra.
std::size_t classes_rank(const LieAlgebra& g, const std::vector<Cochain2>& cocycles);

struct Report {
  std::string algebra;
  std::size_t dims[4] = {0, 0, 0, 0};
  std::size_t ranks[3] = {0, 0, 0};
  std::size_t h[3] = {0, 0, 0};
};

/// Full H^0..H^2 computation, d_0..d_2 each assembled and ranked once.
Report cohomology_report(const LieAlgebra& g, const std::string& name);
nlohmann::json to_json(const Report& r);

}  // namespace qfl::cohomology

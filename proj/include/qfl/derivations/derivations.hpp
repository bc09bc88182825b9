#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "qfl/liecore/lie_algebra.hpp"

namespace qfl::derivations {

using exactlin::Matrix;
using exactlin::Scalar;
using exactlin::Vector;
using liecore::LieAlgebra;

// Linear maps are n x n matrices on the algebra's basis; column b is the
// image of e_b. Flattened coordinates use index a*n + b for entry (a, b).
using LinearMap = Matrix;

struct DerivationSpace {
  std::size_t n = 0;
  std::vector<LinearMap> basis;
  std::size_t dim() const { return basis.size(); }
};

/// Weights of a family of diagonal derivations: weights[i] is the linear
/// form (in `params` parameters) giving the eigenvalue on e_i.
struct DiagonalDerivationSpec {
  std::size_t params = 0;
  std::vector<Vector> weights;
  std::vector<std::string> param_names;

  std::size_t rank() const { return params; }
  /// Eigenvalues at a parameter point.
  Vector instantiate(const Vector& point) const;
  /// Eigenvalues of the a-th generator (unit parameter vector).
  Vector generator(std::size_t a) const;
};

/// D[e_i,e_j] - [D e_i, e_j] - [e_i, D e_j] = 0 as a matrix acting on the
/// flattened D; rows indexed by (pair, component).
Matrix derivation_system(const LieAlgebra& g);

bool is_derivation(const LieAlgebra& g, const LinearMap& d);

DerivationSpace derivation_space(const LieAlgebra& g);
DerivationSpace inner_derivations(const LieAlgebra& g);

/// Solution space of d_k = d_i + d_j over all nonzero c_ij^k. Its rank is
/// the diagonal rank in the given basis, a lower bound for the true rank.
DiagonalDerivationSpec diagonal_derivation_space(const LieAlgebra& g);

bool is_diagonal_derivation(const LieAlgebra& g, const Vector& eigenvalues);
/// True when every generator of the spec is a derivation of g.
bool spec_is_derivation(const LieAlgebra& g, const DiagonalDerivationSpec& t);

/// True when every weight of `inner` lies in the span of `outer`'s
/// diagonal maps, i.e. the torus of `inner` sits inside that of `outer`.
bool spec_contained(const DiagonalDerivationSpec& inner, const DiagonalDerivationSpec& outer);

struct Completeness {
  bool complete = false;
  std::size_t center_dim = 0;
  std::size_t der_dim = 0;
  std::size_t inner_dim = 0;
};

Completeness is_complete(const LieAlgebra& g);

// --- torus maximality ---------------------------------------------------

/// Derivations commuting with the torus: D_ab = 0 unless e_a and e_b carry
/// the same weight form.
DerivationSpace weight_zero_derivations(const LieAlgebra& g, const DiagonalDerivationSpec& t);

struct TorusWitness {
  LinearMap derivation;                 // weight-preserving derivation
  std::vector<std::size_t> weight_space;  // basis indices sharing one weight
};

/// Looks for a weight-preserving derivation with at least two distinct
/// eigenvalues on one weight space. Its semisimple part is a derivation
/// commuting with t but not in t, so finding one proves t is not maximal.
/// Returns nullopt when no such derivation turns up among the candidates
/// tried (basis elements and a few fixed combinations).
std::optional<TorusWitness> non_maximality_witness(const LieAlgebra& g, const DiagonalDerivationSpec& t);

struct TorusRefinement {
  LieAlgebra algebra;            // g in the refined basis
  std::vector<Vector> basis;     // refined basis vectors in old coordinates
  DiagonalDerivationSpec torus;  // full diagonal space in the refined basis
  std::size_t steps = 0;
};

/// Repeatedly splits weight spaces along rational generalized eigenspaces of
/// a witness and recomputes the diagonal space, until no witness is found.
/// Returns nullopt if a witness has irrational eigenvalues.
std::optional<TorusRefinement> refine_torus(const LieAlgebra& g, const DiagonalDerivationSpec& t);

// Small dense helpers shared with the refinement code; exposed for tests.
std::vector<Scalar> characteristic_polynomial(const std::vector<Vector>& m);  // monic, highest first
std::vector<Scalar> rational_roots(const std::vector<Scalar>& poly);          // distinct, increasing

}  // namespace qfl::derivations

#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <tuple>
#include <vector>

#include "json.hpp"
#include "qfl/cohomology/cohomology.hpp"
#include "qfl/liecore/lie_algebra.hpp"

namespace qfl::deform {

using cohomology::Cochain2;
using exactlin::Scalar;
using liecore::LieAlgebra;

// a_{i,j} = sum_l gamma^l_{i,j} alpha_l, so gamma^l is the structure table
// of the l-th unit seed.
class GammaTable {
 public:
  GammaTable(std::size_t n, std::size_t k);
  std::size_t n() const { return n_; }
  std::size_t k() const { return k_; }
  std::size_t t() const { return t_; }
  /// 0 outside 1 <= l <= t-1; antisymmetric in (i, j).
  Scalar gamma(std::size_t l, std::size_t i, std::size_t j) const;

 private:
  std::size_t n_, k_, t_;
  std::map<std::tuple<std::size_t, std::size_t, std::size_t>, Scalar> g_;
};

/// InputError unless 2 <= k <= n-4.
GammaTable gamma_coefficients(std::size_t n, std::size_t k);

/// t + (A^k_{n-1}(1,0,...,0) + C) with the printed rank-2 torus; torus
/// generators come first.
std::shared_ptr<const LieAlgebra> deformation_base(std::size_t n, std::size_t k);

/// F^l_1(Y_i, Y_j) = gamma^l_{i,j} Y_{i+j+k-1} for i + j <= n-k-1, zero on
/// every other pair. `base` must be deformation_base(n, k); n is read off its
/// dimension. InputError unless 2 <= l <= t-1.
Cochain2 deformation_cocycle(std::shared_ptr<const LieAlgebra> base, std::size_t l, std::size_t k);

struct H2Bound {
  std::size_t n = 0, k = 0, t = 0;
  std::size_t bound = 0;    // t - 2
  std::size_t classes = 0;  // rank of the closed F^l_1 modulo B^2
  std::size_t h2 = 0;
  std::vector<std::size_t> not_closed;  // l with d_2 F^l_1 != 0
  bool holds() const { return not_closed.empty() && classes == bound && h2 >= classes; }
};

/// Every F^l_1 is tested for closure first; classes counts only the closed
/// ones, and the open ones are listed rather than thrown on.
/// InputError unless 2 <= k <= n-4.
H2Bound h2_bound_check(std::size_t n, std::size_t k);
nlohmann::json to_json(const H2Bound& b);

}  // namespace qfl::deform

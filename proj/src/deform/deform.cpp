#include "qfl/deform/deform.hpp"

#include <string>

#include "qfl/catalog/catalog.hpp"
#include "qfl/errors.hpp"

namespace qfl::deform {

namespace {

void check_range(std::size_t n, std::size_t k) {
  if (k < 2 || k + 4 > n) {
    throw InputError("need 2 <= k <= n-4, got n=" + std::to_string(n) + " k=" + std::to_string(k));
  }
}

catalog::FamilySpec seed_spec(std::size_t n, std::size_t k) {
  catalog::FamilySpec s;
  s.family = catalog::Family::AC;
  s.n = n;
  s.k = k;
  const std::size_t t = (n - k) / 2;
  s.alphas.assign(t - 1, Scalar(0));
  s.alphas[0] = 1;
  return s;
}

}  // namespace

GammaTable::GammaTable(std::size_t n, std::size_t k) : n_(n), k_(k), t_(0) {
  check_range(n, k);
  t_ = (n - k) / 2;
  for (std::size_t l = 1; l < t_; ++l) {
    std::vector<Scalar> unit(t_ - 1, Scalar(0));
    unit[l - 1] = 1;
    const auto a = catalog::structure_table(unit, n);
    for (std::size_t i = 1; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        const Scalar v = a.a(i, j);
        if (v != 0) g_[{l, i, j}] = v;
      }
    }
  }
}

Scalar GammaTable::gamma(std::size_t l, std::size_t i, std::size_t j) const {
  if (i == j) return 0;
  if (i > j) return -gamma(l, j, i);
  auto it = g_.find({l, i, j});
  return it == g_.end() ? Scalar(0) : it->second;
}

GammaTable gamma_coefficients(std::size_t n, std::size_t k) { return GammaTable(n, k); }

std::shared_ptr<const LieAlgebra> deformation_base(std::size_t n, std::size_t k) {
  check_range(n, k);
  const auto spec = seed_spec(n, k);
  const LieAlgebra nil = catalog::build_family(spec);
  return std::make_shared<const LieAlgebra>(catalog::semidirect_sum(nil, catalog::torus_spec(spec)));
}

Cochain2 deformation_cocycle(std::shared_ptr<const LieAlgebra> base, std::size_t l, std::size_t k) {
  if (!base) throw InputError("deformation_cocycle needs a base algebra");
  // The completion has the two torus generators in front.
  constexpr std::size_t torus = 2;
  if (base->dim() < torus) throw InputError("deformation_cocycle: base is too small");
  const std::size_t n = base->dim() - torus;
  const GammaTable gamma(n, k);
  if (l < 2 || l + 1 > gamma.t()) {
    throw InputError("l must satisfy 2 <= l <= t-1 = " + std::to_string(gamma.t() - 1) + ", got " + std::to_string(l));
  }
  Cochain2 f(base);
  for (std::size_t i = 1; i < n; ++i) {
    for (std::size_t j = i + 1; i + j + k + 1 <= n; ++j) {
      const Scalar c = gamma.gamma(l, i, j);
      if (c == 0) continue;
      exactlin::Vector v = exactlin::zero_vector(base->dim());
      v[torus + i + j + k - 1] = c;
      f.set(torus + i, torus + j, v);
    }
  }
  return f;
}

H2Bound h2_bound_check(std::size_t n, std::size_t k) {
  check_range(n, k);
  H2Bound b;
  b.n = n;
  b.k = k;
  b.t = (n - k) / 2;
  b.bound = b.t >= 2 ? b.t - 2 : 0;
  const auto g = deformation_base(n, k);
  std::vector<Cochain2> cocycles;
  for (std::size_t l = 2; l + 1 <= b.t; ++l) {
    auto f = deformation_cocycle(g, l, k);
    if (cohomology::is_cocycle(f)) {
      cocycles.push_back(std::move(f));
    } else {
      b.not_closed.push_back(l);
    }
  }
  const auto report = cohomology::cohomology_report(*g, "");
  b.h2 = report.h[2];
  b.classes = cocycles.empty() ? 0 : cohomology::classes_rank(*g, cocycles);
  return b;
}

nlohmann::json to_json(const H2Bound& b) {
  nlohmann::json j{{"n", b.n}, {"k", b.k}, {"t", b.t}, {"bound", b.bound}, {"classes", b.classes}, {"H2", b.h2}};
  if (!b.not_closed.empty()) j["not_closed"] = b.not_closed;
  return j;
}

}  // namespace qfl::deform

#include "qfl/derivations/derivations.hpp"

#include <algorithm>
#include <map>

#include "qfl/errors.hpp"
#include "qfl/exactlin/elimination.hpp"
#include "qfl/liecore/invariants.hpp"

namespace qfl::derivations {

using exactlin::Echelon;
using exactlin::Integer;
using exactlin::SparseRow;

Vector DiagonalDerivationSpec::instantiate(const Vector& point) const {
  if (point.size() != params) throw InputError("torus instantiation needs " + std::to_string(params) + " values");
  Vector out = exactlin::zero_vector(weights.size());
  for (std::size_t i = 0; i < weights.size(); ++i) {
    for (std::size_t a = 0; a < params; ++a) out[i] += weights[i][a] * point[a];
  }
  return out;
}

Vector DiagonalDerivationSpec::generator(std::size_t a) const {
  Vector out = exactlin::zero_vector(weights.size());
  for (std::size_t i = 0; i < weights.size(); ++i) out[i] = weights[i].at(a);
  return out;
}

namespace {

Vector flatten(const LinearMap& d) {
  const std::size_t n = d.rows();
  Vector v = exactlin::zero_vector(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (const auto& [b, x] : d.row(a)) v[a * n + b] = x;
  }
  return v;
}

LinearMap unflatten(const Vector& v, std::size_t n) {
  LinearMap d(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    SparseRow row;
    for (std::size_t b = 0; b < n; ++b) {
      if (v[a * n + b] != 0) row.emplace_back(b, v[a * n + b]);
    }
    d.set_row(a, std::move(row));
  }
  return d;
}

using Dense = std::vector<Vector>;

Dense multiply(const Dense& a, const Dense& b) {
  const std::size_t d = a.size();
  Dense c(d, exactlin::zero_vector(d));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t k = 0; k < d; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < d; ++j) c[i][j] += a[i][k] * b[k][j];
    }
  }
  return c;
}

bool is_zero(const Dense& m) {
  for (const auto& r : m) {
    if (!exactlin::is_zero(r)) return false;
  }
  return true;
}

Dense restriction(const LinearMap& d, const std::vector<std::size_t>& w) {
  Dense m(w.size(), exactlin::zero_vector(w.size()));
  for (std::size_t r = 0; r < w.size(); ++r) {
    for (std::size_t s = 0; s < w.size(); ++s) m[r][s] = d.at(w[r], w[s]);
  }
  return m;
}

// More than one eigenvalue iff (M - (tr M / d) I)^d != 0.
bool has_two_eigenvalues(const Dense& m) {
  const std::size_t d = m.size();
  if (d < 2) return false;
  Scalar tr = 0;
  for (std::size_t i = 0; i < d; ++i) tr += m[i][i];
  Dense nmat = m;
  for (std::size_t i = 0; i < d; ++i) nmat[i][i] -= tr / Scalar(static_cast<long>(d));
  Dense p = nmat;
  for (std::size_t e = 1; e < d; ++e) p = multiply(p, nmat);
  return !is_zero(p);
}

std::vector<std::vector<std::size_t>> weight_spaces(const DiagonalDerivationSpec& t) {
  std::map<Vector, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < t.weights.size(); ++i) groups[t.weights[i]].push_back(i);
  std::vector<std::vector<std::size_t>> out;
  for (auto& [w, idx] : groups) out.push_back(std::move(idx));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Integer> divisors(Integer x) {
  if (x < 0) x = -x;
  std::vector<Integer> out;
  for (Integer d = 1; d * d <= x; ++d) {
    if (x % d == 0) {
      out.push_back(d);
      if (d * d != x) out.push_back(x / d);
    }
  }
  return out;
}

Scalar evaluate(const std::vector<Scalar>& poly, const Scalar& x) {
  Scalar v = 0;
  for (const auto& c : poly) v = v * x + c;
  return v;
}

}  // namespace

Matrix derivation_system(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  const std::size_t pairs = n * (n - (n ? 1 : 0)) / 2;
  Matrix sys(pairs * n, n * n);
  std::size_t p = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j, ++p) {
      std::vector<SparseRow> rows(n);
      // D[e_i, e_j] = sum_k c_ij^k D e_k, component m gets c_ij^k D_mk.
      for (const auto& [k, c] : g.terms(i, j)) {
        for (std::size_t m = 0; m < n; ++m) rows[m].emplace_back(m * n + k, c);
      }
      // [D e_i, e_j] = sum_a D_ai [e_a, e_j].
      for (std::size_t a = 0; a < n; ++a) {
        for (const auto& [m, c] : g.terms(a, j)) rows[m].emplace_back(a * n + i, -c);
        for (const auto& [m, c] : g.terms(i, a)) rows[m].emplace_back(a * n + j, -c);
      }
      for (std::size_t m = 0; m < n; ++m) sys.set_row(p * n + m, std::move(rows[m]));
    }
  }
  return sys;
}

bool is_derivation(const LieAlgebra& g, const LinearMap& d) {
  if (d.rows() != g.dim() || d.cols() != g.dim()) throw InputError("is_derivation: map has the wrong shape");
  return exactlin::is_zero(derivation_system(g).apply(flatten(d)));
}

DerivationSpace derivation_space(const LieAlgebra& g) {
  liecore::require_lie(g, "derivation_space");
  DerivationSpace out;
  out.n = g.dim();
  for (const auto& v : exactlin::kernel_basis(derivation_system(g))) out.basis.push_back(unflatten(v, g.dim()));
  return out;
}

DerivationSpace inner_derivations(const LieAlgebra& g) {
  liecore::require_lie(g, "inner_derivations");
  DerivationSpace out;
  out.n = g.dim();
  Echelon e(g.dim() * g.dim());
  for (std::size_t i = 0; i < g.dim(); ++i) {
    LinearMap a = g.ad(i);
    if (e.insert(flatten(a))) out.basis.push_back(std::move(a));
  }
  return out;
}

DiagonalDerivationSpec diagonal_derivation_space(const LieAlgebra& g) {
  liecore::require_lie(g, "diagonal_derivation_space");
  const std::size_t n = g.dim();
  std::vector<SparseRow> rows;
  for (const auto& [ij, terms] : g.brackets()) {
    for (const auto& [k, c] : terms) {
      rows.push_back(exactlin::normalize_row({{k, Scalar(1)}, {ij.first, Scalar(-1)}, {ij.second, Scalar(-1)}}));
    }
  }
  Matrix m(rows.size(), n);
  for (std::size_t r = 0; r < rows.size(); ++r) m.set_row(r, std::move(rows[r]));
  const auto ker = exactlin::kernel_basis(m);

  DiagonalDerivationSpec t;
  t.params = ker.size();
  t.weights.assign(n, exactlin::zero_vector(t.params));
  for (std::size_t a = 0; a < t.params; ++a) {
    t.param_names.push_back("s" + std::to_string(a));
    for (std::size_t i = 0; i < n; ++i) t.weights[i][a] = ker[a][i];
  }
  return t;
}

bool is_diagonal_derivation(const LieAlgebra& g, const Vector& ev) {
  if (ev.size() != g.dim()) throw InputError("eigenvalue list has the wrong length");
  for (const auto& [ij, terms] : g.brackets()) {
    for (const auto& [k, c] : terms) {
      if (ev[k] != ev[ij.first] + ev[ij.second]) return false;
    }
  }
  return true;
}

bool spec_is_derivation(const LieAlgebra& g, const DiagonalDerivationSpec& t) {
  if (t.weights.size() != g.dim()) return false;
  for (std::size_t a = 0; a < t.params; ++a) {
    if (!is_diagonal_derivation(g, t.generator(a))) return false;
  }
  return true;
}

bool spec_contained(const DiagonalDerivationSpec& inner, const DiagonalDerivationSpec& outer) {
  if (inner.weights.size() != outer.weights.size()) return false;
  Echelon e(outer.weights.size());
  for (std::size_t a = 0; a < outer.params; ++a) e.insert(outer.generator(a));
  for (std::size_t a = 0; a < inner.params; ++a) {
    if (e.insert(inner.generator(a))) return false;
  }
  return true;
}

Completeness is_complete(const LieAlgebra& g) {
  Completeness c;
  c.center_dim = liecore::center(g).dim();
  c.der_dim = derivation_space(g).dim();
  c.inner_dim = inner_derivations(g).dim();
  c.complete = c.center_dim == 0 && c.der_dim == c.inner_dim;
  return c;
}

DerivationSpace weight_zero_derivations(const LieAlgebra& g, const DiagonalDerivationSpec& t) {
  liecore::require_lie(g, "weight_zero_derivations");
  const std::size_t n = g.dim();
  if (t.weights.size() != n) throw InputError("torus weights do not match the algebra dimension");
  const Matrix sys = derivation_system(g);
  std::vector<SparseRow> extra;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (t.weights[a] != t.weights[b]) extra.push_back({{a * n + b, Scalar(1)}});
    }
  }
  Matrix full(sys.rows() + extra.size(), n * n);
  for (std::size_t r = 0; r < sys.rows(); ++r) full.set_row(r, sys.row(r));
  for (std::size_t r = 0; r < extra.size(); ++r) full.set_row(sys.rows() + r, std::move(extra[r]));
  DerivationSpace out;
  out.n = n;
  for (const auto& v : exactlin::kernel_basis(full)) out.basis.push_back(unflatten(v, n));
  return out;
}

std::optional<TorusWitness> non_maximality_witness(const LieAlgebra& g, const DiagonalDerivationSpec& t) {
  const auto spaces = weight_spaces(t);
  const DerivationSpace z = weight_zero_derivations(g, t);
  if (z.basis.empty()) return std::nullopt;

  std::vector<LinearMap> candidates = z.basis;
  // Fixed combinations catch spaces where every basis element is
  // scalar-plus-nilpotent on a weight space but a sum is not.
  const std::size_t n = g.dim();
  for (int scheme = 0; scheme < 3; ++scheme) {
    Vector acc = exactlin::zero_vector(n * n);
    for (std::size_t b = 0; b < z.basis.size(); ++b) {
      const long s = static_cast<long>(b) + 1;
      const Scalar c = scheme == 0 ? Scalar(1) : scheme == 1 ? Scalar(s) : Scalar(s * s * (b % 2 ? -1 : 1));
      const Vector f = flatten(z.basis[b]);
      for (std::size_t x = 0; x < f.size(); ++x) acc[x] += c * f[x];
    }
    candidates.push_back(unflatten(acc, n));
  }
  for (const auto& d : candidates) {
    for (const auto& w : spaces) {
      if (has_two_eigenvalues(restriction(d, w))) return TorusWitness{d, w};
    }
  }
  return std::nullopt;
}

std::vector<Scalar> characteristic_polynomial(const std::vector<Vector>& a) {
  // Faddeev-LeVerrier: M_k = A M_{k-1} + c_{d-k+1} I, c_{d-k} = -tr(A M_k)/k.
  const std::size_t d = a.size();
  std::vector<Scalar> coeff(d + 1, Scalar(0));
  coeff[0] = 1;
  Dense m(d, exactlin::zero_vector(d));
  for (std::size_t k = 1; k <= d; ++k) {
    m = multiply(a, m);
    for (std::size_t i = 0; i < d; ++i) m[i][i] += coeff[k - 1];
    const Dense am = multiply(a, m);
    Scalar tr = 0;
    for (std::size_t i = 0; i < d; ++i) tr += am[i][i];
    coeff[k] = -tr / Scalar(static_cast<long>(k));
  }
  return coeff;
}

std::vector<Scalar> rational_roots(const std::vector<Scalar>& poly) {
  std::vector<Scalar> p = poly;
  while (!p.empty() && p.front() == 0) p.erase(p.begin());
  std::vector<Scalar> roots;
  if (p.size() <= 1) return roots;
  if (p.back() == 0) {
    roots.push_back(0);
    while (p.size() > 1 && p.back() == 0) p.pop_back();
  }
  if (p.size() > 1) {
    Integer l = 1;
    for (const auto& c : p) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    const Integer lead = Scalar(p.front() * l).get_num();
    const Integer tail = Scalar(p.back() * l).get_num();
    for (const auto& num : divisors(tail)) {
      for (const auto& den : divisors(lead)) {
        for (int sgn : {1, -1}) {
          Scalar x(num * sgn, den);
          x.canonicalize();
          if (evaluate(p, x) == 0 && std::find(roots.begin(), roots.end(), x) == roots.end()) roots.push_back(x);
        }
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::optional<TorusRefinement> refine_torus(const LieAlgebra& g, const DiagonalDerivationSpec& t) {
  const std::size_t n = g.dim();
  TorusRefinement r;
  r.algebra = g;
  r.torus = t;
  for (std::size_t i = 0; i < n; ++i) r.basis.push_back(exactlin::unit_vector(n, i));

  while (auto w = non_maximality_witness(r.algebra, r.torus)) {
    // Split every weight space along the generalized eigenspaces of the
    // witness; its semisimple part then becomes diagonal.
    std::vector<Vector> local(n);  // new basis in current coordinates
    for (const auto& space : weight_spaces(r.torus)) {
      const Dense m = restriction(w->derivation, space);
      const std::size_t d = space.size();
      std::vector<Vector> pieces;
      for (const auto& lambda : rational_roots(characteristic_polynomial(m))) {
        Dense shifted = m;
        for (std::size_t i = 0; i < d; ++i) shifted[i][i] -= lambda;
        Dense pw = shifted;
        for (std::size_t e = 1; e < d; ++e) pw = multiply(pw, shifted);
        for (auto& v : exactlin::kernel_basis(Matrix::from_dense(pw, d))) pieces.push_back(std::move(v));
      }
      if (pieces.size() != d) return std::nullopt;
      for (std::size_t s = 0; s < d; ++s) {
        Vector v = exactlin::zero_vector(n);
        for (std::size_t q = 0; q < d; ++q) v[space[q]] = pieces[s][q];
        local[space[s]] = std::move(v);
      }
    }
    std::vector<std::string> labels = r.algebra.labels();
    std::vector<Vector> global(n, exactlin::zero_vector(n));
    for (std::size_t i = 0; i < n; ++i) {
      if (local[i] != exactlin::unit_vector(n, i)) labels[i] += "'";
      for (std::size_t q = 0; q < n; ++q) {
        if (local[i][q] == 0) continue;
        for (std::size_t x = 0; x < n; ++x) global[i][x] += local[i][q] * r.basis[q][x];
      }
    }
    LieAlgebra next = liecore::change_basis(r.algebra, local, labels);
    DiagonalDerivationSpec bigger = diagonal_derivation_space(next);
    if (bigger.rank() <= r.torus.rank()) return std::nullopt;
    r.algebra = std::move(next);
    r.basis = std::move(global);
    r.torus = std::move(bigger);
    ++r.steps;
  }
  return r;
}

}  // namespace qfl::derivations

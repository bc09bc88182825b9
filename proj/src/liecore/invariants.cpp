#include "qfl/liecore/invariants.hpp"

#include <string>

#include "qfl/errors.hpp"
#include "qfl/exactlin/elimination.hpp"

namespace qfl::liecore {

using exactlin::Echelon;

Subspace Subspace::span(std::size_t ambient, const std::vector<Vector>& vectors) {
  Subspace s(ambient);
  if (vectors.empty()) return s;
  s.basis_ = exactlin::row_space_basis(Matrix::from_dense(vectors, ambient));
  return s;
}

Subspace Subspace::whole(std::size_t ambient) {
  Subspace s(ambient);
  for (std::size_t i = 0; i < ambient; ++i) s.basis_.push_back(exactlin::unit_vector(ambient, i));
  return s;
}

bool Subspace::contains(const Vector& v) const {
  if (v.size() != ambient_) throw InputError("Subspace::contains: length mismatch");
  Echelon e(ambient_);
  for (const auto& b : basis_) e.insert(b);
  return !e.insert(v);
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) return false;
  Echelon e(ambient_);
  for (const auto& b : basis_) e.insert(b);
  for (const auto& b : other.basis_) {
    if (e.insert(b)) return false;
  }
  return true;
}

namespace {

// [[e_i, e_j], e_k] accumulated into out.
void add_double_bracket(const LieAlgebra& g, std::size_t i, std::size_t j, std::size_t k, Vector& out) {
  for (const auto& [a, c] : g.terms(i, j)) {
    if (a == k) continue;
    for (const auto& [b, d] : g.terms(a, k)) out[b] += c * d;
  }
}

}  // namespace

std::vector<JacobiDefect> jacobi_defect(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  std::vector<JacobiDefect> out;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        Vector v = exactlin::zero_vector(n);
        add_double_bracket(g, i, j, k, v);
        add_double_bracket(g, j, k, i, v);
        add_double_bracket(g, k, i, j, v);
        if (!exactlin::is_zero(v)) out.push_back({i, j, k, std::move(v)});
      }
    }
  }
  return out;
}

bool is_lie_algebra(const LieAlgebra& g) { return jacobi_defect(g).empty(); }

void require_lie(const LieAlgebra& g, const char* what) {
  const auto d = jacobi_defect(g);
  if (d.empty()) return;
  const auto& f = d.front();
  throw PreconditionError(std::string(what) + ": Jacobi identity fails at (" + g.label(f.i) + ", " + g.label(f.j) +
                          ", " + g.label(f.k) + ") and " + std::to_string(d.size() - 1) + " other triple(s)");
}

Subspace center(const LieAlgebra& g) {
  require_lie(g, "center");
  const std::size_t n = g.dim();
  // Row (j, m), column i: m-th coordinate of [e_i, e_j].
  Matrix stack(n * n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (const auto& [m, c] : g.terms(i, j)) stack.set(j * n + m, i, c);
    }
  }
  return Subspace::span(n, exactlin::kernel_basis(stack));
}

Subspace bracket_span(const LieAlgebra& g, const Subspace& u, const Subspace& v) {
  std::vector<Vector> gens;
  for (const auto& x : u.basis()) {
    for (const auto& y : v.basis()) {
      Vector z = bracket(g, x, y);
      if (!exactlin::is_zero(z)) gens.push_back(std::move(z));
    }
  }
  return Subspace::span(g.dim(), gens);
}

CentralSeries lower_central_series(const LieAlgebra& g) {
  require_lie(g, "lower_central_series");
  CentralSeries s;
  const Subspace all = Subspace::whole(g.dim());
  s.terms.push_back(all);
  if (g.dim() == 0) {
    s.nilindex = 0;
    return s;
  }
  for (;;) {
    Subspace next = bracket_span(g, s.terms.back(), all);
    if (next.dim() == 0) {
      s.terms.push_back(std::move(next));
      s.nilindex = s.terms.size() - 1;
      return s;
    }
    if (next == s.terms.back()) return s;
    s.terms.push_back(std::move(next));
  }
}

std::vector<std::size_t> psequence(const CentralSeries& s) {
  std::vector<std::size_t> p;
  if (!s.nilindex) return p;
  for (std::size_t i = 0; i + 1 < s.terms.size(); ++i) p.push_back(s.terms[i].dim() - s.terms[i + 1].dim());
  return p;
}

std::size_t type_of(const LieAlgebra& g) {
  require_lie(g, "type_of");
  const Subspace all = Subspace::whole(g.dim());
  return g.dim() - bracket_span(g, all, all).dim();
}

GradedAlgebra associated_graded(const LieAlgebra& g) {
  const CentralSeries s = lower_central_series(g);
  if (!s.nilindex) throw PreconditionError("associated_graded: algebra is not nilpotent");
  const std::size_t n = g.dim();
  const std::size_t m = *s.nilindex;

  GradedAlgebra out;
  std::vector<std::string> labels;
  for (std::size_t d = 1; d <= m; ++d) {
    // Complement of g_{d+1} in g_d, picked greedily from the echelon basis
    // of g_d so that coordinate subspaces keep the original label order.
    Echelon e(n);
    for (const auto& b : s.terms[d].basis()) e.insert(b);
    std::vector<Vector> chosen;
    for (const auto& b : s.terms[d - 1].basis()) {
      if (!e.insert(b)) continue;
      chosen.push_back(b);
      out.basis.push_back(b);
      out.degree.push_back(d);
      std::size_t nz = 0, at = 0;
      for (std::size_t c = 0; c < n; ++c) {
        if (b[c] != 0) ++nz, at = c;
      }
      labels.push_back(nz == 1 && b[at] == 1 ? g.label(at)
                                             : "W" + std::to_string(d) + "_" + std::to_string(chosen.size() - 1));
    }
    out.psequence.push_back(chosen.size());
    out.pieces.push_back(Subspace::span(n, chosen));
  }

  Matrix p(n, n);
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t r = 0; r < n; ++r) p.set(r, c, out.basis[c][r]);
  }
  out.algebra = LieAlgebra(n, labels);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      const std::size_t target = out.degree[a] + out.degree[b];
      if (target > m) continue;
      const Vector v = bracket(g, out.basis[a], out.basis[b]);
      if (exactlin::is_zero(v)) continue;
      Vector coords = *exactlin::solve(p, v);
      for (std::size_t c = 0; c < n; ++c) {
        if (out.degree[c] != target) coords[c] = 0;
      }
      if (!exactlin::is_zero(coords)) out.algebra.set_bracket(a, b, coords);
    }
  }
  return out;
}

}  // namespace qfl::liecore

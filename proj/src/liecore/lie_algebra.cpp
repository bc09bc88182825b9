#include "qfl/liecore/lie_algebra.hpp"

#include <algorithm>

#include "qfl/errors.hpp"

namespace qfl::liecore {

namespace {

Terms negated(const Terms& t) {
  Terms out = t;
  for (auto& e : out) e.second = -e.second;
  return out;
}

}  // namespace

std::vector<std::string> default_labels(std::size_t n, const std::string& prefix) {
  std::vector<std::string> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

LieAlgebra::LieAlgebra(std::size_t dim, std::vector<std::string> labels) : dim_(dim), table_(dim * dim) {
  set_labels(labels.empty() ? default_labels(dim) : std::move(labels));
}

void LieAlgebra::set_labels(std::vector<std::string> labels) {
  if (labels.size() != dim_) {
    throw InputError("expected " + std::to_string(dim_) + " labels, got " + std::to_string(labels.size()));
  }
  labels_ = std::move(labels);
}

void LieAlgebra::check_index(std::size_t i) const {
  if (i >= dim_) {
    throw InputError("basis index " + std::to_string(i) + " out of range for dimension " + std::to_string(dim_));
  }
}

void LieAlgebra::put(std::size_t i, std::size_t j, Terms t) {
  table_[j * dim_ + i] = negated(t);
  table_[i * dim_ + j] = std::move(t);
}

void LieAlgebra::add_term(std::size_t i, std::size_t j, std::size_t k, const Scalar& raw) {
  check_index(i);
  check_index(j);
  check_index(k);
  if (i == j) throw InputError("bracket [e" + std::to_string(i) + ", e" + std::to_string(i) + "] must vanish");
  Scalar c = raw;  // callers may hand in an unreduced mpq
  c.canonicalize();
  if (c == 0) return;
  Terms t = table_[i * dim_ + j];
  auto it = std::lower_bound(t.begin(), t.end(), k, [](const auto& e, std::size_t x) { return e.first < x; });
  if (it != t.end() && it->first == k) {
    it->second += c;
    if (it->second == 0) t.erase(it);
  } else {
    t.insert(it, {k, c});
  }
  put(i, j, std::move(t));
}

void LieAlgebra::set_bracket(std::size_t i, std::size_t j, const Vector& value) {
  check_index(i);
  check_index(j);
  if (i == j) throw InputError("cannot set a bracket of a basis vector with itself");
  if (value.size() != dim_) throw InputError("bracket value has the wrong length");
  Terms t;
  for (std::size_t k = 0; k < dim_; ++k) {
    Scalar c = value[k];
    c.canonicalize();
    if (c != 0) t.emplace_back(k, std::move(c));
  }
  put(i, j, std::move(t));
}

Scalar LieAlgebra::coeff(std::size_t i, std::size_t j, std::size_t k) const {
  for (const auto& [kk, c] : terms(i, j)) {
    if (kk == k) return c;
  }
  return 0;
}

std::map<std::pair<std::size_t, std::size_t>, Terms> LieAlgebra::brackets() const {
  std::map<std::pair<std::size_t, std::size_t>, Terms> out;
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = i + 1; j < dim_; ++j) {
      if (!table_[i * dim_ + j].empty()) out.emplace(std::make_pair(i, j), table_[i * dim_ + j]);
    }
  }
  return out;
}

std::size_t LieAlgebra::nonzero_brackets() const {
  std::size_t s = 0;
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = i + 1; j < dim_; ++j) s += !table_[i * dim_ + j].empty();
  }
  return s;
}

Matrix LieAlgebra::ad(std::size_t i) const {
  check_index(i);
  Matrix m(dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j) {
    for (const auto& [k, c] : terms(i, j)) m.set(k, j, c);
  }
  return m;
}

Vector bracket(const LieAlgebra& g, const Vector& x, const Vector& y) {
  const std::size_t n = g.dim();
  if (x.size() != n || y.size() != n) throw InputError("bracket: vector length does not match algebra dimension");
  Vector out = exactlin::zero_vector(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j] == 0 || i == j) continue;
      const Scalar xy = x[i] * y[j];
      for (const auto& [k, c] : g.terms(i, j)) out[k] += xy * c;
    }
  }
  return out;
}

LieAlgebra change_basis(const LieAlgebra& g, const std::vector<Vector>& new_basis, std::vector<std::string> labels) {
  const std::size_t n = g.dim();
  if (new_basis.size() != n) throw InputError("change_basis: need exactly dim vectors");
  // P has the new basis vectors as columns; coordinates in the new basis
  // are P^{-1} v.
  Matrix p(n, n);
  for (std::size_t c = 0; c < n; ++c) {
    if (new_basis[c].size() != n) throw InputError("change_basis: vector length mismatch");
    for (std::size_t r = 0; r < n; ++r) p.set(r, c, new_basis[c][r]);
  }
  if (exactlin::rank(p) != n) throw InputError("change_basis: vectors are not a basis");
  LieAlgebra out(n, labels.empty() ? g.labels() : std::move(labels));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Vector v = bracket(g, new_basis[i], new_basis[j]);
      if (exactlin::is_zero(v)) continue;
      out.set_bracket(i, j, *exactlin::solve(p, v));
    }
  }
  return out;
}

}  // namespace qfl::liecore

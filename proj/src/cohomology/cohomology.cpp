#include "qfl/cohomology/cohomology.hpp"

#include <algorithm>
#include <cstdint>
#include <unordered_map>

#include "qfl/errors.hpp"
#include "qfl/exactlin/elimination.hpp"
#include "qfl/liecore/invariants.hpp"

namespace qfl::cohomology {

using exactlin::SparseRow;

std::size_t cochain_dim(std::size_t n, std::size_t k) {
  if (k > n) throw InputError("cochain degree " + std::to_string(k) + " exceeds dimension " + std::to_string(n));
  std::size_t b = 1;
  for (std::size_t i = 0; i < k; ++i) b = b * (n - i) / (i + 1);
  return n * b;
}

namespace {

// k-subsets of {0..n-1} in lexicographic order, with a reverse index.
struct Subsets {
  std::vector<std::vector<std::size_t>> list;
  std::unordered_map<std::uint64_t, std::size_t> index;

  Subsets(std::size_t n, std::size_t k) {
    std::vector<std::size_t> cur;
    build(n, k, 0, cur);
  }

  void build(std::size_t n, std::size_t k, std::size_t from, std::vector<std::size_t>& cur) {
    if (cur.size() == k) {
      std::uint64_t mask = 0;
      for (auto i : cur) mask |= std::uint64_t{1} << i;
      index.emplace(mask, list.size());
      list.push_back(cur);
      return;
    }
    for (std::size_t i = from; i < n; ++i) {
      cur.push_back(i);
      build(n, k, i + 1, cur);
      cur.pop_back();
    }
  }

  std::size_t rank_of(const std::vector<std::size_t>& s) const {
    std::uint64_t mask = 0;
    for (auto i : s) mask |= std::uint64_t{1} << i;
    return index.at(mask);
  }
};

std::size_t pair_rank(std::size_t n, std::size_t i, std::size_t j) {
  // Pairs (0,1),(0,2),...,(0,n-1),(1,2),...
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}

}  // namespace

Cochain2::Cochain2(std::shared_ptr<const LieAlgebra> algebra) : algebra_(std::move(algebra)) {
  if (!algebra_) throw InputError("Cochain2 needs an algebra");
}

void Cochain2::set(std::size_t i, std::size_t j, const Vector& value) {
  const std::size_t n = algebra_->dim();
  if (i >= n || j >= n) throw InputError("cochain index out of range");
  if (i == j) throw InputError("alternating cochain: phi(e_i, e_i) is always zero");
  if (value.size() != n) throw InputError("cochain value has the wrong length");
  Vector v = value;
  if (i > j) {
    std::swap(i, j);
    for (auto& x : v) x = -x;
  }
  if (exactlin::is_zero(v)) {
    values_.erase({i, j});
  } else {
    values_[{i, j}] = std::move(v);
  }
}

Vector Cochain2::value(std::size_t i, std::size_t j) const {
  const std::size_t n = algebra_->dim();
  if (i == j) return exactlin::zero_vector(n);
  const bool flip = i > j;
  auto it = values_.find(flip ? std::make_pair(j, i) : std::make_pair(i, j));
  if (it == values_.end()) return exactlin::zero_vector(n);
  Vector v = it->second;
  if (flip) {
    for (auto& x : v) x = -x;
  }
  return v;
}

Vector Cochain2::coordinates() const {
  const std::size_t n = algebra_->dim();
  Vector c = exactlin::zero_vector(cochain_dim(n, 2));
  for (const auto& [ij, v] : values_) {
    const std::size_t base = pair_rank(n, ij.first, ij.second) * n;
    for (std::size_t m = 0; m < n; ++m) c[base + m] = v[m];
  }
  return c;
}

Cochain2 Cochain2::from_coordinates(std::shared_ptr<const LieAlgebra> algebra, const Vector& c) {
  Cochain2 out(std::move(algebra));
  const std::size_t n = out.algebra().dim();
  if (c.size() != cochain_dim(n, 2)) throw InputError("cochain coordinate vector has the wrong length");
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const std::size_t base = pair_rank(n, i, j) * n;
      Vector v(c.begin() + static_cast<long>(base), c.begin() + static_cast<long>(base + n));
      out.set(i, j, v);
    }
  }
  return out;
}

ComplexSlice differential_matrix(const LieAlgebra& g, std::size_t k) {
  if (k > 2) throw InputError("only d_0, d_1, d_2 are materialized");
  const std::size_t n = g.dim();
  if (n > 64) throw InputError("dimension above 64 is not supported by the cochain indexer");
  liecore::require_lie(g, "differential_matrix");

  ComplexSlice out;
  out.degree = k;
  out.dim_from = cochain_dim(n, k);
  out.dim_to = k + 1 <= n ? cochain_dim(n, k + 1) : 0;
  out.d = Matrix(out.dim_to, out.dim_from);
  if (out.dim_to == 0) return out;

  const Subsets src(n, k);
  const Subsets dst(n, k + 1);
  std::vector<SparseRow> rows(n);
  std::vector<std::size_t> rest;
  for (std::size_t r = 0; r < dst.list.size(); ++r) {
    const auto& J = dst.list[r];
    for (auto& row : rows) row.clear();

    // sum_s (-1)^s [x_{j_s}, phi(.. omit j_s ..)]
    for (std::size_t s = 0; s <= k; ++s) {
      rest.clear();
      for (std::size_t q = 0; q <= k; ++q) {
        if (q != s) rest.push_back(J[q]);
      }
      const std::size_t col0 = src.rank_of(rest) * n;
      const Scalar sign = s % 2 ? -1 : 1;
      for (std::size_t m = 0; m < n; ++m) {
        for (const auto& [p, c] : g.terms(J[s], m)) rows[p].emplace_back(col0 + m, sign * c);
      }
    }
    // sum_{s<t} (-1)^{s+t} phi([x_{j_s}, x_{j_t}], .. omit both ..)
    for (std::size_t s = 0; s <= k; ++s) {
      for (std::size_t t = s + 1; t <= k; ++t) {
        const auto& br = g.terms(J[s], J[t]);
        if (br.empty()) continue;
        std::vector<std::size_t> others;
        for (std::size_t q = 0; q <= k; ++q) {
          if (q != s && q != t) others.push_back(J[q]);
        }
        for (const auto& [q, c] : br) {
          if (std::find(others.begin(), others.end(), q) != others.end()) continue;
          // Sort (q, others...) and pick up the sign of the move.
          std::size_t pos = 0;
          while (pos < others.size() && others[pos] < q) ++pos;
          rest = others;
          rest.insert(rest.begin() + static_cast<long>(pos), q);
          const Scalar sign = ((s + t + pos) % 2) ? -1 : 1;
          const std::size_t col0 = src.rank_of(rest) * n;
          for (std::size_t p = 0; p < n; ++p) rows[p].emplace_back(col0 + p, sign * c);
        }
      }
    }
    for (std::size_t p = 0; p < n; ++p) out.d.set_row(r * n + p, std::move(rows[p]));
    rows.assign(n, {});
  }
  return out;
}

std::size_t cohomology_dim(const LieAlgebra& g, std::size_t k) {
  if (k > 2) throw InputError("cohomology_dim supports degrees 0, 1, 2");
  const std::size_t rk = exactlin::rank(differential_matrix(g, k).d);
  const std::size_t rprev = k == 0 ? 0 : exactlin::rank(differential_matrix(g, k - 1).d);
  return cochain_dim(g.dim(), k) - rk - rprev;
}

bool is_cocycle(const Cochain2& c) {
  const auto d2 = differential_matrix(c.algebra(), 2);
  return exactlin::is_zero(d2.d.apply(c.coordinates()));
}

Cochain2 coboundary(std::shared_ptr<const LieAlgebra> g, const Matrix& phi) {
  const std::size_t n = g->dim();
  if (phi.rows() != n || phi.cols() != n) throw InputError("1-cochain must be an n x n matrix");
  Vector x = exactlin::zero_vector(n * n);
  for (std::size_t m = 0; m < n; ++m) {
    for (const auto& [b, v] : phi.row(m)) x[b * n + m] = v;
  }
  const auto d1 = differential_matrix(*g, 1);
  return Cochain2::from_coordinates(g, d1.d.apply(x));
}

std::size_t classes_rank(const LieAlgebra& g, const std::vector<Cochain2>& cocycles) {
  const auto d1 = differential_matrix(g, 1);
  const auto d2 = differential_matrix(g, 2);
  for (std::size_t i = 0; i < cocycles.size(); ++i) {
    if (!(cocycles[i].algebra() == g)) throw PreconditionError("classes_rank: cochain " + std::to_string(i) + " belongs to another algebra");
    if (!exactlin::is_zero(d2.d.apply(cocycles[i].coordinates()))) {
      throw PreconditionError("classes_rank: cochain " + std::to_string(i) + " is not a cocycle");
    }
  }
  const Matrix b2 = d1.d.transpose();  // rows span B^2
  exactlin::Echelon e(d1.dim_to);
  for (std::size_t r = 0; r < b2.rows(); ++r) e.insert(b2.row(r));
  const std::size_t base = e.rank();
  for (const auto& c : cocycles) e.insert(c.coordinates());
  return e.rank() - base;
}

Report cohomology_report(const LieAlgebra& g, const std::string& name) {
  Report r;
  r.algebra = name;
  const std::size_t n = g.dim();
  for (std::size_t k = 0; k < 4; ++k) r.dims[k] = k <= n ? cochain_dim(n, k) : 0;
  for (std::size_t k = 0; k < 3; ++k) r.ranks[k] = exactlin::rank(differential_matrix(g, k).d);
  for (std::size_t k = 0; k < 3; ++k) r.h[k] = r.dims[k] - r.ranks[k] - (k ? r.ranks[k - 1] : 0);
  return r;
}

nlohmann::json to_json(const Report& r) {
  return {{"algebra", r.algebra},
          {"dims", {{"C0", r.dims[0]}, {"C1", r.dims[1]}, {"C2", r.dims[2]}, {"C3", r.dims[3]}}},
          {"ranks", {{"d0", r.ranks[0]}, {"d1", r.ranks[1]}, {"d2", r.ranks[2]}}},
          {"H", {{"H0", r.h[0]}, {"H1", r.h[1]}, {"H2", r.h[2]}}}};
}

}  // namespace qfl::cohomology

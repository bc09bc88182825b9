#pragma once
// Deliberately naive reference implementations used to cross-check the
// library: dense rational Gauss-Jordan and brute-force constructions built
// straight from the bracket tensor. Nothing here calls into qfl::exactlin.

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <vector>

#include "qfl/liecore/lie_algebra.hpp"

namespace oracle {

using Q = mpq_class;
using Dense = std::vector<std::vector<Q>>;

inline std::size_t rank(Dense m) {
  std::size_t r = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    const Q inv = 1 / m[r][c];
    for (auto& x : m[r]) x *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      const Q f = m[i][c];
      for (std::size_t j = 0; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return r;
}

// Unique solution of a square nonsingular system, by Gauss-Jordan.
inline std::vector<Q> solve_unique(Dense a, std::vector<Q> b) {
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i) a[i].push_back(b[i]);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (a[p][c] == 0) ++p;
    std::swap(a[p], a[c]);
    const Q inv = 1 / a[c][c];
    for (auto& x : a[c]) x *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a[i][c] == 0) continue;
      const Q f = a[i][c];
      for (std::size_t j = 0; j <= n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  std::vector<Q> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = a[i][n];
  return x;
}

// c[i][j][k] = coefficient of e_k in [e_i, e_j].
using Tensor = std::vector<std::vector<std::vector<Q>>>;

inline Tensor tensor(const qfl::liecore::LieAlgebra& g) {
  const std::size_t n = g.dim();
  Tensor c(n, std::vector<std::vector<Q>>(n, std::vector<Q>(n)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) c[i][j][k] = g.coeff(i, j, k);
  return c;
}

// Jacobi, all ordered triples.
inline bool is_lie(const Tensor& c) {
  const std::size_t n = c.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t m = 0; m < n; ++m)
        if (c[i][j][m] != -c[j][i][m]) return false;
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t m = 0; m < n; ++m) {
          Q s = 0;
          for (std::size_t p = 0; p < n; ++p) {
            s += c[i][j][p] * c[p][k][m] + c[j][k][p] * c[p][i][m] + c[k][i][p] * c[p][j][m];
          }
          if (s != 0) return false;
        }
    }
  return true;
}

// dim Der(g): unknowns D[a][b] (image of e_b has coefficient D[a][b] on
// e_a), one equation per ordered (i, j, m).
inline std::size_t derivation_dim(const Tensor& c) {
  const std::size_t n = c.size();
  Dense sys;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t m = 0; m < n; ++m) {
        std::vector<Q> row(n * n);
        for (std::size_t k = 0; k < n; ++k) row[m * n + k] += c[i][j][k];
        for (std::size_t a = 0; a < n; ++a) {
          row[a * n + i] -= c[a][j][m];
          row[a * n + j] -= c[i][a][m];
        }
        sys.push_back(row);
      }
  return n * n - rank(sys);
}

inline std::size_t center_dim(const Tensor& c) {
  const std::size_t n = c.size();
  Dense sys;
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t m = 0; m < n; ++m) {
      std::vector<Q> row(n);
      for (std::size_t i = 0; i < n; ++i) row[i] = c[i][j][m];
      sys.push_back(row);
    }
  return n - rank(sys);
}

inline std::size_t inner_dim(const Tensor& c) {
  const std::size_t n = c.size();
  Dense ads;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Q> row;
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t m = 0; m < n; ++m) row.push_back(c[i][j][m]);
    ads.push_back(row);
  }
  return rank(ads);
}

// dim [g, g]
inline std::size_t derived_dim(const Tensor& c) {
  Dense rows;
  for (const auto& a : c)
    for (const auto& v : a) rows.push_back(v);
  return rank(rows);
}

// Dimension of the space of diagonal derivations: brute-force through the
// full derivation system restricted to diagonal unknowns.
inline std::size_t diagonal_dim(const Tensor& c) {
  const std::size_t n = c.size();
  Dense sys;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t m = 0; m < n; ++m) {
        std::vector<Q> row(n);
        row[m] += c[i][j][m];
        row[i] -= c[i][j][m];
        row[j] -= c[i][j][m];
        sys.push_back(row);
      }
  return n - rank(sys);
}

// a_{i,j} for 1 <= i < j <= bound as the unique solution of
//   a_{i,i+1} = alpha_i,  a_{i,j} - a_{i+1,j} - a_{i,j+1} = 0 (j+1 <= bound)
// where a_{i+1,j} is dropped when i+1 = j. Returned as a dense (bound+1)^2
// table, zero off the upper triangle.
inline Dense structure_constants(const std::vector<Q>& alphas, std::size_t bound) {
  std::vector<std::pair<std::size_t, std::size_t>> unknowns;
  std::vector<std::vector<long>> idx(bound + 1, std::vector<long>(bound + 1, -1));
  for (std::size_t i = 1; i <= bound; ++i)
    for (std::size_t j = i + 1; j <= bound; ++j) {
      idx[i][j] = static_cast<long>(unknowns.size());
      unknowns.push_back({i, j});
    }
  const std::size_t u = unknowns.size();
  Dense a;
  std::vector<Q> b;
  for (std::size_t i = 1; i < bound; ++i) {
    std::vector<Q> row(u);
    row[idx[i][i + 1]] = 1;
    a.push_back(row);
    b.push_back(i <= alphas.size() ? alphas[i - 1] : Q(0));
  }
  for (std::size_t i = 1; i <= bound; ++i)
    for (std::size_t j = i + 1; j + 1 <= bound; ++j) {
      std::vector<Q> row(u);
      row[idx[i][j]] += 1;
      if (i + 1 < j) row[idx[i + 1][j]] -= 1;
      row[idx[i][j + 1]] -= 1;
      a.push_back(row);
      b.push_back(0);
    }
  const auto x = solve_unique(a, b);
  Dense out(bound + 1, std::vector<Q>(bound + 1));
  for (std::size_t t = 0; t < u; ++t) out[unknowns[t].first][unknowns[t].second] = x[t];
  return out;
}

// --- Chevalley-Eilenberg complex on fully antisymmetric tensors ---------
// A k-cochain is stored on every ordered k-tuple (n^k * n coordinates) and
// the differential is the textbook formula on ordered tuples. Ranks are then
// taken on the antisymmetric subspace by restricting to antisymmetrized
// basis cochains. Only intended for n <= 4.

inline std::size_t ipow(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  while (e--) r *= b;
  return r;
}

inline std::vector<std::size_t> digits(std::size_t code, std::size_t n, std::size_t k) {
  std::vector<std::size_t> d(k);
  for (std::size_t s = k; s-- > 0;) {
    d[s] = code % n;
    code /= n;
  }
  return d;
}

inline std::size_t encode(const std::vector<std::size_t>& d, std::size_t n) {
  std::size_t c = 0;
  for (auto x : d) c = c * n + x;
  return c;
}

inline int perm_sign(std::vector<std::size_t> v) {
  int s = 1;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j) {
      if (v[i] == v[j]) return 0;
      if (v[i] > v[j]) s = -s;
    }
  return s;
}

// Antisymmetric basis cochains of degree k: one per (strictly increasing
// tuple, target), as full tensors of size n^k * n.
inline Dense antisymmetric_basis(std::size_t n, std::size_t k) {
  Dense out;
  for (std::size_t code = 0; code < ipow(n, k); ++code) {
    auto d = digits(code, n, k);
    bool inc = true;
    for (std::size_t s = 1; s < k; ++s) inc = inc && d[s - 1] < d[s];
    if (!inc) continue;
    for (std::size_t m = 0; m < n; ++m) {
      std::vector<Q> v(ipow(n, k) * n);
      for (std::size_t c2 = 0; c2 < ipow(n, k); ++c2) {
        auto e = digits(c2, n, k);
        auto se = e;
        std::sort(se.begin(), se.end());
        if (se != d) continue;
        v[c2 * n + m] = perm_sign(e);
      }
      out.push_back(v);
    }
  }
  return out;
}

// (d phi)(x_0..x_k) = sum_s (-1)^s [x_s, phi(..^s..)]
//                   + sum_{s<t} (-1)^{s+t} phi([x_s,x_t], ..^s..^t..)
inline std::vector<Q> ce_differential(const Tensor& c, const std::vector<Q>& phi, std::size_t k) {
  const std::size_t n = c.size();
  std::vector<Q> out(ipow(n, k + 1) * n);
  auto phi_at = [&](const std::vector<std::size_t>& args, std::size_t m) { return phi[encode(args, n) * n + m]; };
  for (std::size_t code = 0; code < ipow(n, k + 1); ++code) {
    const auto x = digits(code, n, k + 1);
    for (std::size_t m = 0; m < n; ++m) {
      Q acc = 0;
      for (std::size_t s = 0; s <= k; ++s) {
        std::vector<std::size_t> rest;
        for (std::size_t q = 0; q <= k; ++q)
          if (q != s) rest.push_back(x[q]);
        const Q sign = s % 2 ? -1 : 1;
        for (std::size_t p = 0; p < n; ++p) acc += sign * phi_at(rest, p) * c[x[s]][p][m];
      }
      for (std::size_t s = 0; s <= k; ++s)
        for (std::size_t t = s + 1; t <= k; ++t) {
          std::vector<std::size_t> rest;
          for (std::size_t q = 0; q <= k; ++q)
            if (q != s && q != t) rest.push_back(x[q]);
          const Q sign = (s + t) % 2 ? -1 : 1;
          for (std::size_t p = 0; p < n; ++p) {
            if (c[x[s]][x[t]][p] == 0) continue;
            auto args = rest;
            args.insert(args.begin(), p);
            acc += sign * c[x[s]][x[t]][p] * phi_at(args, m);
          }
        }
      out[code * n + m] = acc;
    }
  }
  return out;
}

inline std::size_t differential_rank(const Tensor& c, std::size_t k) {
  const std::size_t n = c.size();
  Dense images;
  for (const auto& b : antisymmetric_basis(n, k)) images.push_back(ce_differential(c, b, k));
  return rank(images);
}

inline std::size_t cohomology_dim(const Tensor& c, std::size_t k) {
  const std::size_t n = c.size();
  std::size_t binom = 1;
  for (std::size_t i = 0; i < k; ++i) binom = binom * (n - i) / (i + 1);
  return n * binom - differential_rank(c, k) - (k ? differential_rank(c, k - 1) : 0);
}

}  // namespace oracle

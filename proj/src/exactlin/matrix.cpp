#include "qfl/exactlin/matrix.hpp"

#include <algorithm>
#include <string>

#include "qfl/errors.hpp"
#include "qfl/exactlin/elimination.hpp"

namespace qfl::exactlin {

SparseRow normalize_row(SparseRow row) {
  std::stable_sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseRow out;
  out.reserve(row.size());
  for (auto& e : row) {
    if (!out.empty() && out.back().first == e.first) {
      out.back().second += e.second;
    } else {
      if (!out.empty() && out.back().second == 0) out.pop_back();
      out.push_back(std::move(e));
    }
  }
  if (!out.empty() && out.back().second == 0) out.pop_back();
  return out;
}

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.rows_[i].emplace_back(i, Scalar(1));
  return m;
}

Matrix Matrix::from_dense(const std::vector<Vector>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw InputError("from_dense: ragged row " + std::to_string(r));
    for (std::size_t c = 0; c < cols; ++c) {
      if (rows[r][c] != 0) m.rows_[r].emplace_back(c, rows[r][c]);
    }
  }
  return m;
}

std::size_t Matrix::nonzeros() const {
  std::size_t s = 0;
  for (const auto& r : rows_) s += r.size();
  return s;
}

void Matrix::check_col(std::size_t c) const {
  if (c >= cols_) throw InputError("column index " + std::to_string(c) + " out of range");
}

Scalar Matrix::at(std::size_t r, std::size_t c) const {
  check_col(c);
  const auto& row = rows_.at(r);
  auto it = std::lower_bound(row.begin(), row.end(), c, [](const auto& e, std::size_t x) { return e.first < x; });
  if (it != row.end() && it->first == c) return it->second;
  return 0;
}

void Matrix::set_row(std::size_t r, SparseRow row) {
  auto& dst = rows_.at(r);
  row = normalize_row(std::move(row));
  if (!row.empty()) check_col(row.back().first);
  dst = std::move(row);
}

void Matrix::set(std::size_t r, std::size_t c, const Scalar& value) {
  check_col(c);
  auto& row = rows_.at(r);
  auto it = std::lower_bound(row.begin(), row.end(), c, [](const auto& e, std::size_t x) { return e.first < x; });
  if (it != row.end() && it->first == c) {
    if (value == 0) {
      row.erase(it);
    } else {
      it->second = value;
    }
  } else if (value != 0) {
    row.insert(it, {c, value});
  }
}

void Matrix::add_to(std::size_t r, std::size_t c, const Scalar& value) {
  if (value == 0) return;
  set(r, c, at(r, c) + value);
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_.size());
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    for (const auto& [c, v] : rows_[r]) t.rows_[c].emplace_back(r, v);
  }
  return t;
}

Vector Matrix::apply(const Vector& x) const {
  if (x.size() != cols_) throw InputError("apply: vector length does not match column count");
  Vector y = zero_vector(rows_.size());
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    for (const auto& [c, v] : rows_[r]) y[r] += v * x[c];
  }
  return y;
}

std::vector<Vector> Matrix::to_dense() const {
  std::vector<Vector> out(rows_.size(), zero_vector(cols_));
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    for (const auto& [c, v] : rows_[r]) out[r][c] = v;
  }
  return out;
}

bool operator==(const Matrix& a, const Matrix& b) { return a.cols_ == b.cols_ && a.rows_ == b.rows_; }

namespace {

Echelon echelon_of(const Matrix& m) {
  Echelon e(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) e.insert(m.row(r));
  return e;
}

}  // namespace

std::size_t rank(const Matrix& m) { return echelon_of(m).rank(); }

std::vector<Vector> kernel_basis(const Matrix& m) {
  const Echelon e = echelon_of(m);
  const auto rref = e.reduced();
  std::vector<bool> is_pivot(m.cols(), false);
  for (const auto& row : rref) is_pivot[row.front().first] = true;

  std::vector<Vector> out;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vector v = zero_vector(m.cols());
    v[f] = 1;
    for (const auto& row : rref) {
      for (const auto& [c, x] : row) {
        if (c == f) v[row.front().first] = -x;
      }
    }
    out.push_back(std::move(v));
  }
  return out;
}

std::optional<Vector> solve(const Matrix& a, const Vector& b) {
  if (b.size() != a.rows()) {
    throw InputError("solve: right-hand side has length " + std::to_string(b.size()) + ", expected " +
                     std::to_string(a.rows()));
  }
  const std::size_t n = a.cols();
  Echelon e(n + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    SparseRow row = a.row(r);
    if (b[r] != 0) row.emplace_back(n, b[r]);
    e.insert(row);
  }
  const auto rref = e.reduced();
  Vector x = zero_vector(n);
  for (const auto& row : rref) {
    const std::size_t p = row.front().first;
    if (p == n) return std::nullopt;
    if (row.back().first == n) x[p] = row.back().second;
  }
  return x;
}

std::vector<Vector> row_space_basis(const Matrix& m) {
  std::vector<Vector> out;
  for (const auto& row : echelon_of(m).reduced()) {
    Vector v = zero_vector(m.cols());
    for (const auto& [c, x] : row) v[c] = x;
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace qfl::exactlin

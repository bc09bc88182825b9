#include "qfl/exactlin/elimination.hpp"

#include <algorithm>

namespace qfl::exactlin {

namespace {

void make_primitive(IntegerRow& row) {
  if (row.empty()) return;
  Integer g = 0;
  for (const auto& [c, v] : row) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) break;
  }
  const bool flip = row.front().second < 0;
  if (g != 1) {
    for (auto& [c, v] : row) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  }
  if (flip) {
    for (auto& [c, v] : row) v = -v;
  }
}

// Returns a*x - b*y on sparse integer rows.
IntegerRow combine(const Integer& a, const IntegerRow& x, const Integer& b, const IntegerRow& y) {
  IntegerRow out;
  out.reserve(x.size() + y.size());
  auto ix = x.begin();
  auto iy = y.begin();
  Integer t;
  while (ix != x.end() || iy != y.end()) {
    if (iy == y.end() || (ix != x.end() && ix->first < iy->first)) {
      out.emplace_back(ix->first, a * ix->second);
      ++ix;
    } else if (ix == x.end() || iy->first < ix->first) {
      out.emplace_back(iy->first, -(b * iy->second));
      ++iy;
    } else {
      t = a * ix->second - b * iy->second;
      if (t != 0) out.emplace_back(ix->first, t);
      ++ix;
      ++iy;
    }
  }
  return out;
}

}  // namespace

IntegerRow to_primitive(const SparseRow& row) {
  Integer l = 1;
  for (const auto& [c, v] : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
  IntegerRow out;
  out.reserve(row.size());
  for (const auto& [c, v] : row) {
    if (v == 0) continue;
    Integer x = v.get_num() * (l / v.get_den());
    out.emplace_back(c, std::move(x));
  }
  make_primitive(out);
  return out;
}

Echelon::Echelon(std::size_t cols) : cols_(cols), owner_(cols, -1) {}

IntegerRow Echelon::reduce(IntegerRow row) const {
  Integer g, a, b;
  while (!row.empty()) {
    const long o = owner_[row.front().first];
    if (o < 0) break;
    const IntegerRow& p = pivots_[static_cast<std::size_t>(o)];
    // row <- (p0/g) row - (r0/g) p kills the leading entry.
    mpz_gcd(g.get_mpz_t(), p.front().second.get_mpz_t(), row.front().second.get_mpz_t());
    a = p.front().second / g;
    b = row.front().second / g;
    row = combine(a, row, b, p);
    make_primitive(row);
  }
  return row;
}

bool Echelon::insert(const SparseRow& row) {
  IntegerRow r = reduce(to_primitive(normalize_row(row)));
  if (r.empty()) return false;
  owner_[r.front().first] = static_cast<long>(pivots_.size());
  pivots_.push_back(std::move(r));
  return true;
}

bool Echelon::insert(const Vector& row) {
  SparseRow s;
  for (std::size_t c = 0; c < row.size(); ++c) {
    if (row[c] != 0) s.emplace_back(c, row[c]);
  }
  return insert(s);
}

bool Echelon::contains(const SparseRow& row) const {
  return reduce(to_primitive(normalize_row(row))).empty();
}

std::vector<std::size_t> Echelon::pivot_columns() const {
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < cols_; ++c) {
    if (owner_[c] >= 0) out.push_back(c);
  }
  return out;
}

std::vector<SparseRow> Echelon::reduced() const {
  const auto piv = pivot_columns();
  std::vector<SparseRow> out(piv.size());
  std::vector<long> slot(cols_, -1);
  for (std::size_t s = 0; s < piv.size(); ++s) slot[piv[s]] = static_cast<long>(s);

  // Back substitution from the last pivot column down.
  for (std::size_t s = piv.size(); s-- > 0;) {
    const IntegerRow& p = pivots_[static_cast<std::size_t>(owner_[piv[s]])];
    const Scalar lead(p.front().second);
    SparseRow row;
    row.reserve(p.size());
    for (const auto& [c, v] : p) row.emplace_back(c, Scalar(v) / lead);
    for (std::size_t idx = 1; idx < row.size();) {
      const long t = slot[row[idx].first];
      if (t < 0 || row[idx].second == 0) {
        ++idx;
        continue;
      }
      const Scalar f = row[idx].second;
      const SparseRow& q = out[static_cast<std::size_t>(t)];
      SparseRow merged;
      merged.reserve(row.size() + q.size());
      auto ir = row.begin();
      auto iq = q.begin();
      while (ir != row.end() || iq != q.end()) {
        if (iq == q.end() || (ir != row.end() && ir->first < iq->first)) {
          merged.push_back(*ir++);
        } else if (ir == row.end() || iq->first < ir->first) {
          merged.emplace_back(iq->first, -f * iq->second);
          ++iq;
        } else {
          Scalar v = ir->second - f * iq->second;
          if (v != 0) merged.emplace_back(ir->first, std::move(v));
          ++ir;
          ++iq;
        }
      }
      row = std::move(merged);
      // Entries before idx are untouched (q starts at its pivot > row's pivot
      // and every earlier pivot column was already cleared), so resume there.
    }
    out[s] = std::move(row);
  }
  return out;
}

}  // namespace qfl::exactlin

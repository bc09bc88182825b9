#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "qfl/exactlin/matrix.hpp"

namespace qfl::exactlin {

// Primitive integer row: gcd of the entries is 1 and the leading entry is
// positive. Rational rows are scaled into this form on insertion.
using IntegerRow = std::vector<std::pair<std::size_t, Integer>>;

IntegerRow to_primitive(const SparseRow& row);

/// Incremental row echelon form over Z with primitive rows.
///
/// Rows are inserted one at a time; each is reduced against the existing
/// pivots by fraction-free steps r <- (p/g) r - (a/g) pivot, g = gcd(p, a),
/// followed by division by the content. The first inserted row that
/// survives with leading column c owns the pivot of c.
class Echelon {
 public:
  explicit Echelon(std::size_t cols);

  std::size_t cols() const { return cols_; }
  std::size_t rank() const { return pivots_.size(); }

  /// Returns true when the row was independent of the rows inserted so far.
  bool insert(const SparseRow& row);
  bool insert(const Vector& row);

  /// True if the row lies in the span of the inserted rows.
  bool contains(const SparseRow& row) const;

  /// Pivot columns in increasing order.
  std::vector<std::size_t> pivot_columns() const;

  /// Reduced row echelon form over Q, rows ordered by pivot column, each
  /// pivot normalized to 1.
  std::vector<SparseRow> reduced() const;

 private:
  IntegerRow reduce(IntegerRow row) const;

  std::size_t cols_;
  std::vector<IntegerRow> pivots_;
  std::vector<long> owner_;  // column -> index into pivots_, or -1
};

}  // namespace qfl::exactlin

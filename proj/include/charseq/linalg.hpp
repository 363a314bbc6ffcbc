#pragma once

// Dense linear algebra over F_p. Pivots are taken as the first nonzero entry
// in column order so every result is reproducible.

#include <cstddef>
#include <vector>

#include "charseq/field.hpp"

namespace charseq {

using Row = std::vector<Elem>;
using Matrix = std::vector<Row>;

/// Rank by fraction-free elimination (row_j <- a row_j - b row_i).
std::size_t rank(const PrimeField& k, Matrix m);

/// Reduced row echelon form of the row space, kept for membership tests.
class RowSpace {
 public:
  RowSpace(const PrimeField& k, std::size_t ncols) : k_(k), ncols_(ncols) {}

  /// Adds v; returns false when v was already in the span.
  bool insert(Row v);
  bool contains(Row v) const;
  std::size_t dim() const { return rows_.size(); }
  std::size_t ncols() const { return ncols_; }
  const std::vector<Row>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

 private:
  void reduce(Row& v) const;

  PrimeField k_;
  std::size_t ncols_;
  std::vector<Row> rows_;
  std::vector<std::size_t> pivots_;
};

/// Basis of {x : m x = 0}, one vector per free column, in column order.
std::vector<Row> kernel(const PrimeField& k, const Matrix& m, std::size_t ncols);

}  // namespace charseq

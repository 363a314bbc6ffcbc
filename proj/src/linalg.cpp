#include "charseq/linalg.hpp"

#include <algorithm>

namespace charseq {

std::size_t rank(const PrimeField& k, Matrix m) {
  if (m.empty()) return 0;
  const std::size_t ncols = m.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < m.size(); ++c) {
    std::size_t piv = r;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[r], m[piv]);
    const Elem a = m[r][c];
    for (std::size_t j = r + 1; j < m.size(); ++j) {
      const Elem b = m[j][c];
      if (b == 0) continue;
      for (std::size_t t = c; t < ncols; ++t)
        m[j][t] = k.sub(k.mul(a, m[j][t]), k.mul(b, m[r][t]));
    }
    ++r;
  }
  return r;
}

void RowSpace::reduce(Row& v) const {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Elem c = v[pivots_[i]];
    if (c == 0) continue;
    const Row& row = rows_[i];
    for (std::size_t t = pivots_[i]; t < ncols_; ++t)
      if (row[t] != 0) v[t] = k_.sub(v[t], k_.mul(c, row[t]));
  }
}

bool RowSpace::insert(Row v) {
  v.resize(ncols_, 0);
  reduce(v);
  auto it = std::find_if(v.begin(), v.end(), [](Elem e) { return e != 0; });
  if (it == v.end()) return false;
  const auto piv = static_cast<std::size_t>(it - v.begin());
  const Elem inv = k_.inv(v[piv]);
  for (auto& e : v) e = k_.mul(e, inv);
  // Keep the form reduced: clear the new pivot column from existing rows.
  for (auto& row : rows_) {
    const Elem c = row[piv];
    if (c == 0) continue;
    for (std::size_t t = piv; t < ncols_; ++t)
      if (v[t] != 0) row[t] = k_.sub(row[t], k_.mul(c, v[t]));
  }
  auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), piv) - pivots_.begin();
  pivots_.insert(pivots_.begin() + pos, piv);
  rows_.insert(rows_.begin() + pos, std::move(v));
  return true;
}

bool RowSpace::contains(Row v) const {
  v.resize(ncols_, 0);
  reduce(v);
  return std::all_of(v.begin(), v.end(), [](Elem e) { return e == 0; });
}

std::vector<Row> kernel(const PrimeField& k, const Matrix& m, std::size_t ncols) {
  RowSpace rs(k, ncols);
  for (const auto& row : m) rs.insert(row);
  std::vector<bool> is_pivot(ncols, false);
  for (auto p : rs.pivots()) is_pivot[p] = true;
  std::vector<Row> basis;
  for (std::size_t f = 0; f < ncols; ++f) {
    if (is_pivot[f]) continue;
    Row x(ncols, 0);
    x[f] = 1;
    for (std::size_t i = 0; i < rs.dim(); ++i) x[rs.pivots()[i]] = k.neg(rs.rows()[i][f]);
    basis.push_back(std::move(x));
  }
  return basis;
}

}  // namespace charseq

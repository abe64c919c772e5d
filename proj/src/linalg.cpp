#include "bqtop/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace bqtop {

SparseVec make_sparse(std::map<std::size_t, Scalar> entries) {
  SparseVec out;
  out.reserve(entries.size());
  for (auto& [i, c] : entries)
    if (!c.is_zero()) out.emplace_back(i, std::move(c));
  return out;
}

SparseVec add_scaled(const SparseVec& a, const SparseVec& b, const Scalar& c) {
  SparseVec out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      Scalar v = c * b[j].second;
      if (!v.is_zero()) out.emplace_back(b[j].first, std::move(v));
      ++j;
    } else {
      Scalar v = a[i].second + c * b[j].second;
      if (!v.is_zero()) out.emplace_back(a[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

SparseVec scaled(const SparseVec& a, const Scalar& c) {
  if (c.is_zero()) return {};
  SparseVec out = a;
  for (auto& e : out) e.second *= c;
  return out;
}

Scalar coefficient(const SparseVec& v, std::size_t index) {
  auto it = std::lower_bound(v.begin(), v.end(), index,
                             [](const auto& e, std::size_t k) { return e.first < k; });
  if (it != v.end() && it->first == index) return it->second;
  return Scalar(0);
}

std::pair<SparseVec, SparseVec> Eliminator::reduce_tracked(const SparseVec& v) const {
  SparseVec res;
  for (const auto& [i, c] : v) {
    Scalar x = field_.from(c);
    if (!x.is_zero()) res.emplace_back(i, std::move(x));
  }
  SparseVec combo;
  // Rows are fully reduced, so the pivot coefficients of v decide everything.
  std::vector<std::pair<std::size_t, Scalar>> hits;
  for (const auto& [i, c] : res)
    if (rows_.count(i) != 0) hits.emplace_back(i, c);
  for (const auto& [p, c] : hits) {
    const Row& row = rows_.at(p);
    res = add_scaled(res, row.vec, -c);
    if (track_) combo = add_scaled(combo, row.combo, c);
  }
  return {std::move(res), std::move(combo)};
}

SparseVec Eliminator::reduce(const SparseVec& v) const { return reduce_tracked(v).first; }

bool Eliminator::insert(const SparseVec& v) {
  auto [res, combo] = reduce_tracked(v);
  std::size_t index = inserted_++;
  if (res.empty()) {
    if (track_) {
      SparseVec dep = scaled(combo, Scalar(-1));
      dep = add_scaled(dep, SparseVec{{index, Scalar(1)}}, Scalar(1));
      deps_.push_back(field_.is_rational() ? dep : scaled(dep, field_.one()));
    }
    return false;
  }
  Scalar inv = res.front().second.inverse();
  Row row;
  row.vec = scaled(res, inv);
  if (track_) {
    // res = v - combo·inserted, expressed over insertion indices.
    SparseVec c = scaled(combo, Scalar(-1));
    c = add_scaled(c, SparseVec{{index, field_.one()}}, Scalar(1));
    row.combo = scaled(c, inv);
  }
  std::size_t pivot = row.vec.front().first;
  for (auto& [p, other] : rows_) {
    Scalar c = coefficient(other.vec, pivot);
    if (c.is_zero()) continue;
    other.vec = add_scaled(other.vec, row.vec, -c);
    if (track_) other.combo = add_scaled(other.combo, row.combo, -c);
  }
  rows_.emplace(pivot, std::move(row));
  return true;
}

std::size_t rank_of(const std::vector<SparseVec>& columns, const Field& field) {
  Eliminator e(field);
  for (const auto& c : columns) e.insert(c);
  return e.rank();
}

std::vector<SparseVec> kernel_of(const std::vector<SparseVec>& columns, const Field& field) {
  Eliminator e(field, true);
  for (const auto& c : columns) e.insert(c);
  return e.dependencies();
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols, rows);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) t.at(c, r) = at(r, c);
  return t;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data.begin(), data.end(), [](const BigInt& x) { return sgn(x) == 0; });
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols != b.rows) throw std::invalid_argument("matrix shape mismatch");
  IntMatrix m(a.rows, b.cols);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t k = 0; k < a.cols; ++k) {
      const BigInt& x = a.at(i, k);
      if (sgn(x) == 0) continue;
      for (std::size_t j = 0; j < b.cols; ++j) m.at(i, j) += x * b.at(k, j);
    }
  return m;
}

IntMatrix SparseIntMatrix::dense() const {
  IntMatrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c)
    for (const auto& [r, v] : columns[c]) m.at(r, c) += v;
  return m;
}

std::vector<SparseVec> SparseIntMatrix::over(const Field& field) const {
  std::vector<SparseVec> out;
  out.reserve(columns.size());
  for (const auto& col : columns) {
    std::map<std::size_t, Scalar> acc;
    for (const auto& [r, v] : col) acc[r] += field.from(Rational(v));
    out.push_back(make_sparse(std::move(acc)));
  }
  return out;
}

}  // namespace bqtop

#include "tenspec/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace tenspec::linalg {

std::vector<size_t> rref(Mat& m) {
  std::vector<size_t> pivots;
  if (m.empty()) return pivots;
  const size_t rows = m.size(), cols = m[0].size();
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t p = r;
    while (p < rows && m[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(m[r], m[p]);
    const Rational inv = m[r][c].inverse();
    for (size_t j = c; j < cols; ++j) m[r][j] *= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      const Rational f = m[i][c];
      for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  m.resize(pivots.size());
  return pivots;
}

size_t rank(Mat m) { return rref(m).size(); }

Mat nullspace(const Mat& m, size_t cols) {
  Mat a = m;
  for (auto& row : a)
    if (row.size() != cols) throw std::invalid_argument("nullspace: ragged matrix");
  const auto pivots = rref(a);
  std::vector<bool> is_pivot(cols, false);
  for (size_t c : pivots) is_pivot[c] = true;
  Mat basis;
  for (size_t c = 0; c < cols; ++c) {
    if (is_pivot[c]) continue;
    Vec v(cols, Rational(0));
    v[c] = Rational(1);
    for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a[r][c];
    basis.push_back(std::move(v));
  }
  return basis;
}

Rational det(Mat a) {
  const size_t n = a.size();
  for (const auto& row : a)
    if (row.size() != n) throw std::invalid_argument("det: non-square matrix");
  Rational result(1);
  for (size_t c = 0; c < n; ++c) {
    size_t p = c;
    while (p < n && a[p][c].is_zero()) ++p;
    if (p == n) return Rational(0);
    if (p != c) {
      std::swap(a[c], a[p]);
      result = -result;
    }
    result *= a[c][c];
    const Rational inv = a[c][c].inverse();
    for (size_t i = c + 1; i < n; ++i) {
      if (a[i][c].is_zero()) continue;
      const Rational f = a[i][c] * inv;
      for (size_t j = c; j < n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  return result;
}

void SpanBasis::reduce(Vec& v) const {
  for (const auto& row : rows_) {
    size_t p = 0;
    while (p < dim_ && row[p].is_zero()) ++p;
    if (p == dim_) continue;
    if (!v[p].is_zero()) {
      const Rational f = v[p];
      for (size_t j = p; j < dim_; ++j) v[j] -= f * row[j];
    }
  }
}

bool SpanBasis::insert(Vec v) {
  if (v.size() != dim_) throw std::invalid_argument("SpanBasis: dimension mismatch");
  reduce(v);
  size_t p = 0;
  while (p < dim_ && v[p].is_zero()) ++p;
  if (p == dim_) return false;
  const Rational inv = v[p].inverse();
  for (size_t j = p; j < dim_; ++j) v[j] *= inv;
  // back-substitute into existing rows, keep rows sorted by pivot column
  for (auto& row : rows_) {
    if (!row[p].is_zero()) {
      const Rational f = row[p];
      for (size_t j = p; j < dim_; ++j) row[j] -= f * v[j];
    }
  }
  auto it = rows_.begin();
  for (; it != rows_.end(); ++it) {
    size_t q = 0;
    while (q < dim_ && (*it)[q].is_zero()) ++q;
    if (q > p) break;
  }
  rows_.insert(it, std::move(v));
  return true;
}

bool SpanBasis::contains(Vec v) const {
  if (v.size() != dim_) throw std::invalid_argument("SpanBasis: dimension mismatch");
  reduce(v);
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x.is_zero(); });
}

bool SpanBasis::contains_all(const SpanBasis& other) const {
  if (other.dim_ != dim_) throw std::invalid_argument("SpanBasis: dimension mismatch");
  return std::all_of(other.rows_.begin(), other.rows_.end(),
                     [this](const Vec& v) { return contains(v); });
}

}  // namespace tenspec::linalg

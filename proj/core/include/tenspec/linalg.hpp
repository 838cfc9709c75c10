#pragma once

#include <optional>
#include <vector>

#include "tenspec/rational.hpp"

namespace tenspec::linalg {

using Vec = std::vector<Rational>;
using Mat = std::vector<Vec>;

// Reduced row echelon form in place; returns pivot column indices.
std::vector<size_t> rref(Mat& m);

size_t rank(Mat m);

// Canonical basis of { x : m x = 0 } (rows of m are equations), one vector per
// free column of the RREF, in ascending free-column order.
Mat nullspace(const Mat& m, size_t cols);

Rational det(Mat m);

// A subspace maintained in RREF; canonical: two spans are equal iff their row
// lists are identical.
class SpanBasis {
 public:
  SpanBasis() : dim_(0) {}
  explicit SpanBasis(size_t ambient_dim) : dim_(ambient_dim) {}

  size_t ambient_dim() const { return dim_; }
  size_t rank() const { return rows_.size(); }
  const Mat& rows() const { return rows_; }

  // Returns true if the vector enlarged the span.
  bool insert(Vec v);
  bool contains(Vec v) const;
  bool contains_all(const SpanBasis& other) const;

  friend bool operator==(const SpanBasis& a, const SpanBasis& b) {
    return a.dim_ == b.dim_ && a.rows_ == b.rows_;
  }
  friend bool operator!=(const SpanBasis& a, const SpanBasis& b) { return !(a == b); }

 private:
  void reduce(Vec& v) const;  // against current rows
  size_t dim_;
  Mat rows_;  // RREF, pivots normalized to 1, sorted by pivot column
};

}  // namespace tenspec::linalg

#pragma once

#include <map>
#include <string>
#include <vector>

#include "tenspec/rational.hpp"

namespace tenspec::symgroup {

// Weakly decreasing sequence of positive parts.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<unsigned> parts);
  static Partition parse(const std::string& s);  // "2,2,1"

  const std::vector<unsigned>& parts() const { return parts_; }
  unsigned r() const;  // sum of parts
  Partition conjugate() const;

  friend auto operator<=>(const Partition&, const Partition&) = default;
  std::string str() const;

 private:
  std::vector<unsigned> parts_;
};

// All partitions of r, in a fixed deterministic order.
std::vector<Partition> partitions_of(unsigned r);

// Bijection on {0..r-1}; composition (s*t)(i) = s(t(i)).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<unsigned> images);
  static Permutation identity(unsigned r);

  unsigned size() const { return img_.size(); }
  unsigned operator()(unsigned i) const { return img_[i]; }
  const std::vector<unsigned>& images() const { return img_; }

  Permutation compose(const Permutation& other) const;  // this after other
  Permutation inverse() const;
  int sign() const;
  bool is_identity() const;

  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<unsigned> img_;
};

// Lexicographic enumeration of S_r.
std::vector<Permutation> symmetric_group(unsigned r);

Partition cycle_type(const Permutation& sigma);
std::vector<std::vector<unsigned>> cycles(const Permutation& sigma);

// Sparse element of Q[S_r]; zero coefficients are never stored.
class GroupAlgElem {
 public:
  GroupAlgElem() = default;
  explicit GroupAlgElem(unsigned r) : r_(r) {}
  static GroupAlgElem unit(const Permutation& sigma, const Rational& c = Rational(1));

  unsigned r() const { return r_; }
  const std::map<Permutation, Rational>& coeffs() const { return c_; }
  Rational coeff(const Permutation& sigma) const;
  bool is_zero() const { return c_.empty(); }

  GroupAlgElem& add(const Permutation& sigma, const Rational& c);
  GroupAlgElem operator+(const GroupAlgElem& o) const;
  GroupAlgElem operator*(const GroupAlgElem& o) const;  // convolution
  GroupAlgElem scale(const Rational& c) const;

  friend bool operator==(const GroupAlgElem&, const GroupAlgElem&) = default;

 private:
  unsigned r_ = 0;
  std::map<Permutation, Rational> c_;
};

// Young symmetrizer c_lambda = a_lambda * b_lambda for the canonical tableau
// (rows filled 1..r left-to-right, top-to-bottom). Integer coefficients;
// coefficient of the identity is 1; c^2 = (r!/f^lambda) c.
GroupAlgElem young_symmetrizer(const Partition& lambda);

// Row-filled tableau variant conjugated by sigma (cell entries permuted);
// used to test conjugation-invariance of downstream answers.
GroupAlgElem young_symmetrizer_conjugate(const Partition& lambda, const Permutation& sigma);

// f^lambda by the hook length formula.
BigInt hook_dimension(const Partition& lambda);

BigInt factorial(unsigned n);

}  // namespace tenspec::symgroup

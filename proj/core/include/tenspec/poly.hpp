#pragma once

#include <set>
#include <string>
#include <vector>

#include "tenspec/rational.hpp"

namespace tenspec {

// Dense univariate polynomial over Q in the loop variable t.
// Invariant: trailing (highest-degree) zero coefficients are trimmed, so the
// leading coefficient is nonzero unless the polynomial is zero (empty coeffs).
class Poly {
 public:
  Poly() = default;
  Poly(const Rational& c);
  explicit Poly(std::vector<Rational> coeffs);

  static Poly t(unsigned power = 1);  // the monomial t^power

  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  const Rational& coeff(size_t i) const;  // 0 beyond degree
  const std::vector<Rational>& coeffs() const { return c_; }
  const Rational& leading() const;  // throws on zero polynomial

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  Poly scale(const Rational& c) const;

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Rational operator()(const Rational& alpha) const;  // Horner

  // Exact division; throws std::domain_error if the division leaves a remainder.
  Poly divexact(const Poly& d) const;
  std::pair<Poly, Poly> divmod(const Poly& d) const;
  Poly derivative() const;

  // Human-readable, descending powers: "t^4 - t^2", "2t - 1", "0".
  std::string str() const;
  // Dense coefficient strings in ascending degree order.
  std::vector<std::string> coeff_strings() const;

 private:
  void trim();
  std::vector<Rational> c_;
};

Rational poly_eval(const Poly& p, const Rational& alpha);

// Exact determinant. Bareiss fraction-free elimination for small matrices;
// evaluation at deg-bound+1 points plus Newton interpolation beyond that.
// Both routes give the same polynomial as cofactor expansion.
Poly poly_matrix_det(const std::vector<std::vector<Poly>>& m);
Poly poly_matrix_det_bareiss(const std::vector<std::vector<Poly>>& m);
Poly poly_matrix_det_cofactor(const std::vector<std::vector<Poly>>& m);

// Rank over the rational function field Q(t), by fraction-free elimination.
size_t poly_matrix_rank(std::vector<std::vector<Poly>> m);

struct IntegerRoots {
  std::set<BigInt> roots;   // every r here satisfies p(r) = 0
  bool all_integer = false; // true iff dividing out found roots leaves a constant
};

// Integer roots of a nonzero polynomial (throws on the zero polynomial).
IntegerRoots integer_roots(const Poly& p);

Poly gcd(const Poly& a, const Poly& b);  // monic gcd

}  // namespace tenspec

#pragma once

#include <string>
#include <variant>

#include "tenspec/poly.hpp"
#include "tenspec/rational.hpp"

namespace tenspec {

// Coefficient of a morphism: a polynomial in t for generic sessions, a plain
// rational once t has been specialized. A session fixes one variant; arithmetic
// between the two variants throws.
class Scalar {
 public:
  static Scalar generic(Poly p) { return Scalar(std::move(p)); }
  static Scalar specialized(Rational r) { return Scalar(std::move(r)); }

  bool is_generic() const { return std::holds_alternative<Poly>(v_); }
  bool is_specialized() const { return !is_generic(); }
  bool is_zero() const;

  const Poly& poly() const;
  const Rational& rat() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  Scalar scale(const Rational& c) const;

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  // Generic scalars evaluate at t = alpha; specialized ones ignore alpha.
  Rational eval(const Rational& alpha) const;

  std::string str() const;

 private:
  explicit Scalar(Poly p) : v_(std::move(p)) {}
  explicit Scalar(Rational r) : v_(std::move(r)) {}
  std::variant<Poly, Rational> v_;
};

}  // namespace tenspec

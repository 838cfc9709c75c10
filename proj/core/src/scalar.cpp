#include "tenspec/scalar.hpp"

#include <stdexcept>

namespace tenspec {

namespace {
[[noreturn]] void mixed() { throw std::invalid_argument("Scalar: mixed generic/specialized variants"); }
}

bool Scalar::is_zero() const {
  return is_generic() ? std::get<Poly>(v_).is_zero() : std::get<Rational>(v_).is_zero();
}

const Poly& Scalar::poly() const {
  if (!is_generic()) throw std::invalid_argument("Scalar: not generic");
  return std::get<Poly>(v_);
}

const Rational& Scalar::rat() const {
  if (is_generic()) throw std::invalid_argument("Scalar: not specialized");
  return std::get<Rational>(v_);
}

Scalar Scalar::operator-() const {
  return is_generic() ? Scalar(-std::get<Poly>(v_)) : Scalar(-std::get<Rational>(v_));
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (is_generic() != o.is_generic()) mixed();
  if (is_generic())
    std::get<Poly>(v_) += std::get<Poly>(o.v_);
  else
    std::get<Rational>(v_) += std::get<Rational>(o.v_);
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (is_generic() != o.is_generic()) mixed();
  if (is_generic())
    std::get<Poly>(v_) *= std::get<Poly>(o.v_);
  else
    std::get<Rational>(v_) *= std::get<Rational>(o.v_);
  return *this;
}

Scalar Scalar::scale(const Rational& c) const {
  return is_generic() ? Scalar(std::get<Poly>(v_).scale(c)) : Scalar(std::get<Rational>(v_) * c);
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.is_generic() != b.is_generic()) mixed();
  return a.v_ == b.v_;
}

Rational Scalar::eval(const Rational& alpha) const {
  return is_generic() ? std::get<Poly>(v_)(alpha) : std::get<Rational>(v_);
}

std::string Scalar::str() const {
  return is_generic() ? std::get<Poly>(v_).str() : std::get<Rational>(v_).str();
}

}  // namespace tenspec

#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "tenspec/rational.hpp"

namespace tenspec::boolflat {

// A field coordinate: Q (p == 0) or the prime field F_p.
struct FieldDesc {
  unsigned p = 0;
  friend bool operator==(const FieldDesc&, const FieldDesc&) = default;
  std::string str() const { return p == 0 ? "Q" : "F" + std::to_string(p); }
};

Rational field_normalize(const FieldDesc& f, const Rational& x);
Rational field_add(const FieldDesc& f, const Rational& a, const Rational& b);
Rational field_mul(const FieldDesc& f, const Rational& a, const Rational& b);
Rational field_neg(const FieldDesc& f, const Rational& a);
Rational field_inv(const FieldDesc& f, const Rational& a);  // throws on zero

// Finite product of fields; the absolutely flat rings of this library.
// Elements are coordinate tuples, one Rational per factor (normalized mod p
// for prime-field factors).
class ProductRing {
 public:
  explicit ProductRing(std::vector<FieldDesc> factors);
  // "Q^3", "F2xF3xF5", "Q" — case-insensitive, 'x' separates factors,
  // '^' repeats one.
  static ProductRing parse(const std::string& descriptor);

  size_t size() const { return factors_.size(); }
  const FieldDesc& factor(size_t i) const { return factors_[i]; }
  const std::vector<FieldDesc>& factors() const { return factors_; }
  std::string str() const;

  using Elem = std::vector<Rational>;
  Elem zero() const { return Elem(size(), Rational(0)); }
  Elem one() const { return Elem(size(), Rational(1)); }
  Elem normalize(Elem e) const;
  Elem add(const Elem& a, const Elem& b) const;
  Elem mul(const Elem& a, const Elem& b) const;
  Elem neg(const Elem& a) const;
  bool is_idempotent(const Elem& e) const;

  friend bool operator==(const ProductRing&, const ProductRing&) = default;

 private:
  std::vector<FieldDesc> factors_;
};

using RingElem = ProductRing::Elem;

// Idempotent of a product ring, identified by its support (the coordinates
// where it equals 1). The Boolean algebra structure: xor = symmetric
// difference of supports, and = intersection.
class BoolElem {
 public:
  BoolElem() = default;
  explicit BoolElem(std::set<size_t> support) : support_(std::move(support)) {}
  static BoolElem from_elem(const ProductRing& ring, const RingElem& e);  // e must be idempotent

  const std::set<size_t>& support() const { return support_; }
  bool is_zero() const { return support_.empty(); }

  BoolElem bxor(const BoolElem& o) const;
  BoolElem band(const BoolElem& o) const;
  BoolElem complement(size_t universe) const;
  bool orthogonal_to(const BoolElem& o) const;
  bool subset_of(const BoolElem& o) const;

  RingElem to_elem(const ProductRing& ring) const;

  friend auto operator<=>(const BoolElem&, const BoolElem&) = default;
  std::string str() const;  // "{1,3}" with 1-based indices

 private:
  std::set<size_t> support_;  // 0-based factor indices
};

// Ideal of a product ring. Canonical form: the set of factor indices where
// some generator is nonzero; the ideal is everything supported inside it.
class RingIdeal {
 public:
  RingIdeal() = default;
  RingIdeal(const ProductRing& ring, const std::vector<RingElem>& generators);
  static RingIdeal from_subset(std::set<size_t> subset);

  const std::set<size_t>& subset() const { return subset_; }
  bool contains(const ProductRing& ring, const RingElem& e) const;
  bool is_prime(size_t factor_count) const;  // omits exactly one factor
  friend bool operator==(const RingIdeal&, const RingIdeal&) = default;
  friend bool operator<(const RingIdeal& a, const RingIdeal& b) { return a.subset_ < b.subset_; }

 private:
  std::set<size_t> subset_;
};

struct Orthogonalized {
  std::vector<BoolElem> orthogonal;
  BoolElem principal;
};

// Turns generators of a Boolean-algebra ideal into a mutually orthogonal
// family with the same span, plus the principal generator (their sum). The
// recursion executes f_i = e_i e_n, g_i = e_i(1+e_n), h = (1+sum e_j) e_n with
// genuine ring arithmetic on idempotents, where 1+e is the Boolean complement.
Orthogonalized orthogonalize(const ProductRing& ring, const std::vector<BoolElem>& gens);

std::set<BoolElem> idempotents_of_ideal(const ProductRing& ring, const RingIdeal& ideal);

// Pre: J is an ideal of the Boolean algebra (contains 0, closed under meet
// with arbitrary elements and xor of orthogonal members) — checked.
RingIdeal ideal_of_idempotents(const ProductRing& ring, const std::set<BoolElem>& J);

// The coordinate-function isomorphism for R = F^k: element -> (point -> F).
// Pre: all factors equal.
std::vector<Rational> cont_iso_apply(const ProductRing& ring, const RingElem& a);
RingElem cont_iso_inverse(const ProductRing& ring, const std::vector<Rational>& values);

// Enumerates all 2^k idempotents, in subset order.
std::vector<BoolElem> all_idempotents(size_t factor_count);

// Exhaustive round trips between ring ideals and Boolean-algebra ideals.
bool verify_ideal_correspondence(const ProductRing& ring);

// Additive, multiplicative, injective and surjective, on all idempotents plus
// a deterministic sample grid. Pre: all factors equal.
bool verify_cont_iso(const ProductRing& ring);

}  // namespace tenspec::boolflat

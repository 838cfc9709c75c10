#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "tenspec/boolflat.hpp"
#include "tenspec/spectral.hpp"

namespace tenspec::idealcalc {

// Small commutative coefficient ring for the free-module backend: Z/m with
// m <= 1000, or a finite product of prime fields (F_p or Q coordinates).
class SmallRing {
 public:
  static SmallRing zmod(unsigned m);
  static SmallRing product(std::vector<boolflat::FieldDesc> fields);
  // "Z/12", "F2xF3", "Q"
  static SmallRing parse(const std::string& descriptor);

  bool is_zmod() const { return m_.has_value(); }
  unsigned modulus() const;
  const std::vector<boolflat::FieldDesc>& fields() const;
  std::string str() const;

  // Elements: single residue for Z/m, coordinate tuple otherwise.
  using Elem = std::vector<Rational>;
  Elem zero() const;
  Elem one() const;
  Elem normalize(Elem e) const;
  Elem add(const Elem& a, const Elem& b) const;
  Elem mul(const Elem& a, const Elem& b) const;
  bool is_zero_elem(const Elem& e) const;
  // All elements, when the ring is finite (Z/m or products without Q).
  std::optional<std::vector<Elem>> enumerate() const;

 private:
  SmallRing() = default;
  std::optional<unsigned> m_;
  std::vector<boolflat::FieldDesc> fields_;
};

// A prime ideal of a small ring, with a decidable membership test.
struct SmallPrime {
  std::string name;                  // "(2)", "M2"
  std::optional<unsigned> p;         // Z/m case: the prime divisor
  std::optional<size_t> omitted;     // product case: the surviving factor
  bool contains(const SmallRing& ring, const SmallRing::Elem& e) const;
};

std::vector<SmallPrime> ring_primes(const SmallRing& ring);

// Matrix over a small ring; Hom(a, b) in the free-module category.
struct RMat {
  size_t rows = 0, cols = 0;
  std::vector<SmallRing::Elem> a;
  const SmallRing::Elem& at(size_t r, size_t c) const { return a[r * cols + c]; }
};

RMat rmat_zero(const SmallRing& ring, size_t rows, size_t cols);
RMat rmat_mul(const SmallRing& ring, const RMat& x, const RMat& y);
RMat rmat_kron(const SmallRing& ring, const RMat& x, const RMat& y);
SmallRing::Elem rmat_trace(const SmallRing& ring, const RMat& x);
bool rmat_is_zero(const SmallRing& ring, const RMat& x);

// The windowed tensor ideal I(P) = P · Hom: membership is entrywise.
bool freemod_ideal_member(const SmallRing& ring, const SmallPrime& prime, const RMat& f);

// tr*(P) membership: tr(g f) in P for every g — equivalent to entrywise
// membership, verified computationally via matrix units.
bool freemod_trace_star_member(const SmallRing& ring, const SmallPrime& prime, const RMat& f);

struct FreeModulesSpectrum {
  SmallRing ring;
  std::vector<SmallPrime> primes;
  spectral::FinitePoset poset;      // discrete, order-isomorphic to Spec R
  spectral::SpectralMap pi;         // Spec⊗ L(R) -> Spec R
  spectral::SpectralMap sigma_tr;   // Spec R -> Spec⊗ L(R)
  bool pi_of_ideal_checks = false;  // restriction of I(P) to End(1) equals P
  bool integrality_checks = false;  // sampled windowed integrality of each quotient
  bool trace_star_matches = false;  // tr*(P) = I(P) on the window
  // witness that the zero ideal fails integrality (composite Z/m only)
  std::optional<std::pair<SmallRing::Elem, SmallRing::Elem>> zero_ideal_witness;
};

// Enumerates Spec R for the free-module category over R on a rank <= 3
// window, verifying the restriction and integrality properties per prime.
FreeModulesSpectrum spec_free_modules(const SmallRing& ring);

}  // namespace tenspec::idealcalc

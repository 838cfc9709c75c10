#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "tenspec/boolflat.hpp"
#include "tenspec/spectral.hpp"

namespace tenspec::projcat {

using boolflat::BoolElem;
using boolflat::FieldDesc;
using boolflat::ProductRing;
using boolflat::RingIdeal;

// Matrix over a single field coordinate (Q or F_p), entries normalized.
class FMat {
 public:
  FMat() : rows_(0), cols_(0) {}
  FMat(FieldDesc field, size_t rows, size_t cols);
  static FMat identity(FieldDesc field, size_t n);

  const FieldDesc& field() const { return f_; }
  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  const Rational& at(size_t r, size_t c) const { return a_[r * cols_ + c]; }
  void set(size_t r, size_t c, const Rational& v);

  bool is_zero() const;
  FMat add(const FMat& o) const;
  FMat mul(const FMat& o) const;
  FMat kron(const FMat& o) const;
  size_t rank() const;
  std::optional<FMat> inverse() const;  // square only; nullopt when singular

  friend bool operator==(const FMat&, const FMat&) = default;

 private:
  FieldDesc f_;
  size_t rows_, cols_;
  std::vector<Rational> a_;
};

// Object of the projective-module category over a product of fields: one free
// rank per factor.
struct DimVector {
  std::vector<unsigned> dims;
  friend bool operator==(const DimVector&, const DimVector&) = default;
  unsigned total() const;
  std::string str() const;
  static DimVector parse(const std::string& s);  // comma list
};

DimVector tensor(const DimVector& a, const DimVector& b);  // componentwise product
DimVector direct_sum(const DimVector& a, const DimVector& b);

// Morphism: one matrix per factor, block i of shape target[i] x source[i].
class BlockMorphism {
 public:
  BlockMorphism() = default;
  BlockMorphism(const ProductRing& ring, const DimVector& source, const DimVector& target);
  static BlockMorphism identity(const ProductRing& ring, const DimVector& a);
  static BlockMorphism from_blocks(std::vector<FMat> blocks);

  const std::vector<FMat>& blocks() const { return b_; }
  FMat& block(size_t i) { return b_[i]; }
  const FMat& block(size_t i) const { return b_[i]; }
  bool is_zero() const;

  friend bool operator==(const BlockMorphism&, const BlockMorphism&) = default;

 private:
  std::vector<FMat> b_;
};

BlockMorphism compose(const BlockMorphism& g, const BlockMorphism& f);
BlockMorphism tensor(const BlockMorphism& f, const BlockMorphism& g);
BlockMorphism add(const BlockMorphism& f, const BlockMorphism& g);

// Central elements are diagonal scalars per factor.
BlockMorphism central(const ProductRing& ring, const DimVector& a,
                      const boolflat::RingElem& z);

struct SupportSet {
  std::set<size_t> indices;
  friend auto operator<=>(const SupportSet&, const SupportSet&) = default;
  std::string str() const;
};

// Factors where the morphism is nonzero; e(f) is the idempotent on it.
SupportSet support(const BlockMorphism& f);
SupportSet support(const DimVector& a);
BoolElem support_idempotent(const BlockMorphism& f);

struct SerreIdeal {
  SupportSet objects_supported_in;  // the ideal = all objects supported here
  RingIdeal centre_ideal;           // the matching ideal of Z(A) = R
  bool contains(const DimVector& a) const;
};

// All Serre tensor ideals, one per subset of factors; count 2^k.
std::vector<SerreIdeal> enumerate_serre_ideals(const ProductRing& ring);

struct QuotientResult {
  ProductRing ring;   // product of the surviving factors
  DimVector source;
  DimVector target;
  BlockMorphism map;
  std::vector<size_t> kept_factors;
};

// Kill the factors inside the ideal's canonical subset.
QuotientResult quotient_map(const ProductRing& ring, const DimVector& source,
                            const DimVector& target, const BlockMorphism& f,
                            const RingIdeal& ideal);

// Membership in the prime tensor ideal attached to a prime of the centre:
// e(f) ∈ P, i.e. the block at the unique surviving factor vanishes.
bool sigma_membership(const BlockMorphism& f, const RingIdeal& prime, size_t factor_count);

struct SplitWitness {
  std::optional<BlockMorphism> retraction;  // set when supports are disjoint
  SupportSet overlap;                       // otherwise the intersection witness
};

// Pre: inclusion blockwise injective. When the subobject support misses the
// cokernel support, a retraction is built from the support data alone.
SplitWitness split_check(const ProductRing& ring, const DimVector& sub, const DimVector& whole,
                         const BlockMorphism& inclusion);

struct ProjSpectrum {
  spectral::FinitePoset poset;              // discrete, one point per prime
  std::vector<RingIdeal> primes;
  spectral::SpectralMap sigma;              // Spec R -> Spec⊗ A(R)
  spectral::SpectralMap pi;                 // Spec⊗ A(R) -> Spec R
};

// The tensor spectrum of the model category: discrete, order-isomorphic to
// Spec R, with the section sigma(P) = {f : e(f) ∈ P} and its retraction pi.
ProjSpectrum spectrum(const ProductRing& ring);

struct ModelChecks {
  size_t serre_count = 0;
  bool serre_count_ok = false;        // exactly 2^k Serre ideals
  bool serre_round_trip = false;      // ideal -> support -> ideal is the identity
  bool support_product_rule = false;  // f ⊗ g = 0 iff supports are disjoint
  bool support_composition = false;   // supp(f ∘ g) inside the intersection
  bool quotient_fullness = false;     // Hom surjects with the support kernel
  bool joint_faithfulness = false;    // killed in every quotient => zero
  bool factor_decomposition = false;  // A(R) -> prod of quotients bijective on Homs
  bool sigma_section = false;         // centre membership matches the prime section
  bool all() const {
    return serre_count_ok && serre_round_trip && support_product_rule && support_composition &&
           quotient_fullness && joint_faithfulness && factor_decomposition && sigma_section;
  }
};

// Exhaustive support-pattern checks plus seeded random matrices, dims <= max_dim.
ModelChecks run_model_checks(const ProductRing& ring, unsigned max_dim, unsigned seed);

}  // namespace tenspec::projcat

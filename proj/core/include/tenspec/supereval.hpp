#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "tenspec/rational.hpp"
#include "tenspec/wbcat.hpp"

namespace tenspec::supereval {

struct BudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Image of a morphism under the evaluation functor at (p|q): a linear map
// from the source tensor power to the target tensor power of Q^{p|q}.
// Basis indices 0..p-1 are even, p..p+q-1 odd; a multi-index is encoded
// leftmost-digit-major in base p+q. Diagram images preserve total parity, so
// these maps are even.
class SuperTensor {
 public:
  SuperTensor(wbcat::Word source, wbcat::Word target, unsigned p, unsigned q);

  unsigned p() const { return p_; }
  unsigned q() const { return q_; }
  unsigned dim() const { return p_ + q_; }
  const wbcat::Word& source() const { return src_; }
  const wbcat::Word& target() const { return dst_; }
  const std::map<std::pair<uint64_t, uint64_t>, Rational>& entries() const { return e_; }

  void add(uint64_t row, uint64_t col, const Rational& v);
  Rational at(uint64_t row, uint64_t col) const;
  bool is_zero() const { return e_.empty(); }

  SuperTensor compose(const SuperTensor& inner) const;  // this after inner
  SuperTensor tensor_with(const SuperTensor& other) const;
  Rational supertrace() const;  // endomorphisms only

  friend bool operator==(const SuperTensor&, const SuperTensor&) = default;

 private:
  wbcat::Word src_, dst_;
  unsigned p_, q_;
  std::map<std::pair<uint64_t, uint64_t>, Rational> e_;
};

// Largest dense multi-index count allowed per Hom-space evaluation.
inline constexpr uint64_t kEvalBudget = 20000;

// The evaluation functor on a single diagram (no coefficient).
SuperTensor eval_diagram(const wbcat::WBDiagram& d, const wbcat::Word& w,
                         const wbcat::Word& w2, unsigned p, unsigned q);

// Pre: f is specialized at alpha = p - q, or generic (t substituted by p - q).
SuperTensor eval_morphism(const wbcat::WBMorphism& f, unsigned p, unsigned q);

// Exact rational basis of the linear combinations of canonical diagrams that
// evaluate to zero, as coefficient vectors over enumerate_diagrams(w, w2).
std::vector<std::vector<Rational>> kernel_basis(const wbcat::Word& w, const wbcat::Word& w2,
                                                unsigned p, unsigned q);

struct SuperDimension {
  unsigned even = 0;
  unsigned odd = 0;
  friend bool operator==(const SuperDimension&, const SuperDimension&) = default;
};

// Even/odd dimensions of the image of an idempotent endomorphism. Checks
// idempotence and the trace identity even - odd = tr(e)|_{t = p-q}.
SuperDimension super_dimension(const wbcat::WBMorphism& e, unsigned p, unsigned q);

}  // namespace tenspec::supereval

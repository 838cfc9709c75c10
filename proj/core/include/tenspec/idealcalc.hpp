#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "tenspec/linalg.hpp"
#include "tenspec/spectral.hpp"
#include "tenspec/supereval.hpp"
#include "tenspec/wbcat.hpp"

namespace tenspec::idealcalc {

using supereval::BudgetError;
using wbcat::Parameter;
using wbcat::WBMorphism;
using wbcat::Word;

// Finite family of objects all ideal computations are relative to; always
// closed under duals and contains the unit object.
class ProbeWindow {
 public:
  explicit ProbeWindow(std::vector<Word> objects);
  static ProbeWindow words_up_to(size_t max_len);

  const std::vector<Word>& objects() const { return objs_; }
  bool contains(const Word& w) const;
  size_t max_len() const;

  friend bool operator==(const ProbeWindow&, const ProbeWindow&) = default;

 private:
  std::vector<Word> objs_;  // sorted by length then lexicographically
};

struct PairKey {
  Word src, dst;
  friend auto operator<=>(const PairKey&, const PairKey&) = default;
};

// For every window pair, an exact subspace of the diagram span in canonical
// coordinates. Pairs whose words have different balance carry the zero space
// implicitly and are not stored.
class IdealSpan {
 public:
  IdealSpan(ProbeWindow window, Parameter param);

  const ProbeWindow& window() const { return window_; }
  const Parameter& param() const { return param_; }
  const std::map<PairKey, linalg::SpanBasis>& spans() const { return spans_; }

  linalg::SpanBasis& span(const PairKey& key);
  const linalg::SpanBasis& span(const PairKey& key) const;  // throws outside window
  bool pair_in_window(const PairKey& key) const;

  bool member(const WBMorphism& f) const;  // throws when the pair is outside
  bool insert(const WBMorphism& f);

  bool includes(const IdealSpan& other) const;  // pairwise span inclusion
  friend bool operator==(const IdealSpan& a, const IdealSpan& b) {
    return a.window_ == b.window_ && a.param_ == b.param_ && a.spans_ == b.spans_;
  }

  size_t total_rank() const;

 private:
  ProbeWindow window_;
  Parameter param_;
  std::map<PairKey, linalg::SpanBasis> spans_;
};

// Least windowed span containing the generators and closed under the ideal
// moves h ∘ (f ⊗ 1_C) ∘ g. Computed exactly on each window pair through the
// name factorization <f>(X, Y) = Hom(X ⊗ dual(A) ⊗ B, Y) ∘ (1_X ⊗ name f);
// generators may live on pairs outside the stored window.
IdealSpan generate_ideal(const std::vector<WBMorphism>& gens, const ProbeWindow& window,
                         std::optional<Parameter> param = std::nullopt);

bool ideal_member(const WBMorphism& f, const IdealSpan& ideal);

// One round of the literal closure moves adds nothing; used to re-check that
// computed spans really are windowed ideals.
bool verify_closure(const IdealSpan& ideal, size_t max_pairs = 6);

// Gram pairing kernel per pair: { f | tr(g f) = 0 for all g }. At a rational
// parameter the centre is a field and only I = 0 is proper.
IdealSpan tr_star(const ProbeWindow& window, const Rational& alpha);

struct GramAnalysis {
  size_t dim = 0;          // Hom dimension
  Poly det;                // generic Gram determinant
  size_t nullity = 0;      // kernel dimension over Q(t)
  IntegerRoots roots;      // of the determinant (when nonzero)
};

// Generic-parameter Gram data for one endomorphism pair.
GramAnalysis gram_analysis(const Word& w);
std::vector<std::vector<Poly>> gram_matrix_generic(const Word& src, const Word& dst);
linalg::Mat gram_matrix_at(const Word& src, const Word& dst, const Rational& alpha);

struct NilpotenceVerdict {
  bool found = false;
  unsigned power = 0;  // least n with f^{⊗n} in the ideal, when found
};

// Never claims non-membership: absence of a witness up to max_power reports
// found = false.
NilpotenceVerdict nilpotent_member(const WBMorphism& f, const IdealSpan& ideal,
                                   unsigned max_power);

struct QuasiInvertibleVerdict {
  enum class Kind { Yes, No, Unknown } kind = Kind::Unknown;
  // certificate: 1 = g ∘ (f ⊗ 1_C) ∘ h with the scaling folded into h
  std::optional<Word> witness_object;
  std::optional<WBMorphism> g, h;
};

QuasiInvertibleVerdict quasi_invertible(const WBMorphism& f, const ProbeWindow& window);

// Windowed kernel of the evaluation functor at (p|q).
IdealSpan functor_kernel_ideal(unsigned p, unsigned q, const ProbeWindow& window);

// Samples the integrality criterion: no f, g outside the span with f ⊗ g
// inside, over pairs whose tensor products stay in the window.
bool sample_integrality(const IdealSpan& ideal, unsigned seed, unsigned trials);

// Membership tag for ideals describable without a stored window.
struct TraceRadicalTag {
  Rational alpha;
};
struct FunctorKernelTag {
  unsigned p, q;
};
using TensorPrimeTag = std::variant<TraceRadicalTag, FunctorKernelTag>;

bool tag_member(const WBMorphism& f, const TensorPrimeTag& tag);

struct ChainWitness {
  unsigned from_r;  // witness lies in M(from_r) \ M(from_r + 1)
  PairKey pair;
  linalg::Vec coefficients;
};

struct ChainSpectrum {
  int n = 0;
  unsigned max_r = 0;
  std::vector<std::pair<unsigned, unsigned>> pq;  // (p, q) along the chain
  std::vector<IdealSpan> ideals;                  // M(0) ⊇ M(1) ⊇ ...
  bool m0_is_trace_radical = false;
  std::vector<ChainWitness> witnesses;            // strictness, one per step
  spectral::SpectralSpaceDesc space;              // the ω+1 chain, Zariski
  spectral::SpectralMap pi;                       // chain -> one-point Spec Q
  spectral::SpectralMap sigma_tr;                 // point -> M(0)
  bool maps_spectral = false;
  bool pi_sigma_identity = false;
};

// Verified prefix of the prime chain at integer parameter n: M(r) is the
// kernel at (n+r|r) for n >= 0 (resp. (r|r-n) for n <= 0, with M(0) the trace
// radical when n = 0). Verification failures throw std::logic_error.
ChainSpectrum chain_spectrum(int n, unsigned max_r, const ProbeWindow& window);

// Windowed span generated by pairwise tensor products of the ideal's basis
// elements (products may exceed the window; they fold back in through the
// name factorization). Stops early once the target span is reached.
IdealSpan tensor_square_span(const IdealSpan& ideal, const IdealSpan* early_stop_target = nullptr);

// S_lambda(L) = 0 in the quotient iff the Young symmetrizer, embedded as an
// endomorphism of "u"^r, lies in the ideal.
bool schur_vanishes(const symgroup::Partition& lambda, const TensorPrimeTag& tag,
                    const Rational& alpha);
bool schur_vanishes(const symgroup::Partition& lambda, const IdealSpan& ideal);

// The scalar by which the symmetrizer acts on the unit object (every strand
// collapses); zero for (1,1) — a square wedge of the unit vanishes.
Rational symmetrizer_unit_scalar(const symgroup::Partition& lambda);

}  // namespace tenspec::idealcalc

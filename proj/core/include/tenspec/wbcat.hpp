#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tenspec/scalar.hpp"
#include "tenspec/symgroup.hpp"

namespace tenspec::wbcat {

enum class Letter : uint8_t { Up, Down };

inline Letter flip(Letter l) { return l == Letter::Up ? Letter::Down : Letter::Up; }

// Orientation word: the objects of the diagram category. Up is the generating
// object, Down its dual; the empty word is the tensor unit.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters) : l_(std::move(letters)) {}
  static Word parse(const std::string& s);  // over {u, d}

  size_t size() const { return l_.size(); }
  bool empty() const { return l_.empty(); }
  Letter at(size_t i) const { return l_[i]; }
  int balance() const;  // #up - #down
  Word dual() const;    // reverse and flip
  Word tensor(const Word& o) const;
  static Word ups(size_t r);

  friend auto operator<=>(const Word&, const Word&) = default;
  std::string str() const;

 private:
  std::vector<Letter> l_;
};

// Perfect matching between the positions of a source and a target word.
// Node numbering: source positions 0..m-1, then target positions m..m+n-1.
// Valid edges: source-up/target-up or source-down/target-down (through
// strands), source-up/source-down (cap), target-up/target-down (cup).
// Canonical form: edges as (low, high) pairs, sorted.
class WBDiagram {
 public:
  WBDiagram() = default;
  WBDiagram(std::vector<std::pair<uint16_t, uint16_t>> edges);

  const std::vector<std::pair<uint16_t, uint16_t>>& edges() const { return e_; }
  uint16_t partner(uint16_t node) const;
  size_t strands() const { return e_.size(); }

  friend auto operator<=>(const WBDiagram&, const WBDiagram&) = default;
  std::string str() const;  // needs no words: "0-2,1-3"
  std::string str(size_t source_len) const;  // "s0-t0,s1-t1"

 private:
  std::vector<std::pair<uint16_t, uint16_t>> e_;
};

// All valid diagrams from w to w2 in a deterministic canonical order; empty
// when the up/down balance differs. For an endomorphism word with r ups and
// s downs the count is (r+s)!.
std::vector<WBDiagram> enumerate_diagrams(const Word& w, const Word& w2);

bool diagram_valid(const WBDiagram& d, const Word& w, const Word& w2);

// Session parameter: the loop value. Generic keeps t as a polynomial variable;
// Specialized fixes t = alpha.
class Parameter {
 public:
  static Parameter generic() { return Parameter(std::nullopt); }
  static Parameter at(Rational alpha) { return Parameter(std::move(alpha)); }

  bool is_generic() const { return !alpha_.has_value(); }
  const Rational& alpha() const;

  Scalar zero() const;
  Scalar one() const;
  Scalar from_rational(const Rational& c) const;
  Scalar loop_factor(unsigned loops) const;  // t^loops or alpha^loops

  friend bool operator==(const Parameter&, const Parameter&) = default;
  std::string str() const;  // "generic" or the rational

 private:
  explicit Parameter(std::optional<Rational> a) : alpha_(std::move(a)) {}
  std::optional<Rational> alpha_;
};

// Finite linear combination of diagrams sharing one source/target pair.
class WBMorphism {
 public:
  WBMorphism() = default;
  WBMorphism(Word source, Word target, Parameter param);
  static WBMorphism zero(Word source, Word target, Parameter param);
  static WBMorphism single(Word source, Word target, Parameter param, WBDiagram d,
                           Scalar coeff);
  static WBMorphism identity(const Word& w, const Parameter& param);

  const Word& source() const { return src_; }
  const Word& target() const { return dst_; }
  const Parameter& param() const { return param_; }
  const std::map<WBDiagram, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  WBMorphism& add_term(const WBDiagram& d, const Scalar& c);
  WBMorphism operator+(const WBMorphism& o) const;
  WBMorphism operator-() const;
  WBMorphism operator-(const WBMorphism& o) const { return *this + (-o); }
  WBMorphism scale(const Rational& c) const;
  WBMorphism scale(const Scalar& c) const;

  friend bool operator==(const WBMorphism&, const WBMorphism&) = default;

  // Coefficient vector over enumerate_diagrams(source, target); specialized
  // sessions only.
  std::vector<Rational> coefficient_vector() const;
  static WBMorphism from_coefficients(const Word& w, const Word& w2, const Parameter& param,
                                      const std::vector<Rational>& coeffs);

  // Substitute t = alpha (generic input), or reinterpret at the same alpha.
  WBMorphism specialize(const Rational& alpha) const;

  std::string str() const;

 private:
  Word src_, dst_;
  Parameter param_ = Parameter::generic();
  std::map<WBDiagram, Scalar> terms_;
};

// g after f; each closed middle loop contributes one loop factor.
WBMorphism compose(const WBMorphism& g, const WBMorphism& f);
WBMorphism tensor(const WBMorphism& f, const WBMorphism& g);

// Elementary morphisms. cup: unit -> two-letter word; cap: two-letter word ->
// unit. The word must consist of one up and one down letter.
WBMorphism cup(const Word& two_letters, const Parameter& param);
WBMorphism cap(const Word& two_letters, const Parameter& param);
// The symmetry constraint on two single letters: a crossing diagram.
WBMorphism braiding(const Word& left, const Word& right, const Parameter& param);

// The name of f: bends all source strands to the left of the target, giving a
// morphism unit -> dual(source) . target. Pure relabeling; unbend inverts it.
WBMorphism adjoint_name(const WBMorphism& f);
WBMorphism unbend_name(const WBMorphism& name, const Word& source);

// Categorical trace of an endomorphism: close source i onto target i and
// count loops; trace(id_w) = t^{|w|}.
Scalar trace(const WBMorphism& f);

// Same value computed through compose with explicit cups/caps; test oracle.
Scalar trace_categorical(const WBMorphism& f);

// Through-strand action of S_r on "u"^r; a group homomorphism.
WBMorphism embed_perm(const symgroup::Permutation& sigma, const Parameter& param);
WBMorphism embed_group_alg(const symgroup::GroupAlgElem& x, const Parameter& param);

// tr(sigma^{-1} ∘ f^{⊗r}) = prod over cycles of sigma of tr(f^{len}), extended
// linearly: sum_sigma coeff_x(sigma) * prod_{cycles c} power_traces[len(c)].
// power_traces is indexed 1..r (so power_traces[0] = tr(f)).
Scalar twisted_power_trace(const std::vector<Scalar>& power_traces,
                           const symgroup::GroupAlgElem& x);
Rational twisted_power_trace(const std::vector<Rational>& power_traces,
                             const symgroup::GroupAlgElem& x);

// Canonical JSON form: words, parameter, and a list of [edge-list,
// coefficient] pairs in canonical diagram order. Byte-stable per morphism.
std::string to_canonical_json(const WBMorphism& f);

}  // namespace tenspec::wbcat

#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

namespace tenspec::spectral {

// Finite T0 space presented by its specialization order. Convention:
// x <= y means y lies in the closure of {x}; Zariski-closed = up-closed.
class FinitePoset {
 public:
  FinitePoset(std::vector<std::string> points, const std::vector<std::pair<size_t, size_t>>& less);
  // "a<b,a<c,d" — relations and isolated points, comma separated
  static FinitePoset parse(const std::string& descriptor);

  size_t size() const { return points_.size(); }
  const std::vector<std::string>& points() const { return points_; }
  bool leq(size_t x, size_t y) const { return leq_[x][y]; }
  bool is_up_closed(const std::set<size_t>& s) const;

  friend bool operator==(const FinitePoset&, const FinitePoset&) = default;

 private:
  std::vector<std::string> points_;
  std::vector<std::vector<bool>> leq_;
};

struct OmegaChain {
  friend bool operator==(const OmegaChain&, const OmegaChain&) = default;
};

// Point of N ∪ {∞}.
struct OmegaPoint {
  bool inf = false;
  unsigned r = 0;
  static OmegaPoint nat(unsigned r) { return {false, r}; }
  static OmegaPoint infinity() { return {true, 0}; }
  friend bool operator==(const OmegaPoint&, const OmegaPoint&) = default;
};

// Subsets of N ∪ {∞} expressible in this library's closed-set grammar:
// either a finite set (listed members, optionally ∞) or the complement of a
// finite subset of N (optionally including ∞). Closed under complement.
class OmegaSet {
 public:
  static OmegaSet empty() { return OmegaSet(false, {}, false); }
  static OmegaSet whole() { return OmegaSet(true, {}, true); }
  static OmegaSet finite(std::set<unsigned> members, bool with_inf = false) {
    return OmegaSet(false, std::move(members), with_inf);
  }
  static OmegaSet interval(unsigned r);  // [0, r]
  static OmegaSet cofinite(std::set<unsigned> missing, bool with_inf = true) {
    return OmegaSet(true, std::move(missing), with_inf);
  }
  // "{}", "all", "[0,3]", "{1,2,inf}", "co{0,4}" (complement of {0,4} in N, plus inf),
  // "co{0,4}-inf" (same without inf)
  static OmegaSet parse(const std::string& descriptor);

  bool cofinite_kind() const { return cofinite_; }
  bool contains_inf() const { return inf_; }
  const std::set<unsigned>& exceptions() const { return nats_; }

  bool contains(const OmegaPoint& p) const;
  bool is_empty() const;
  bool is_whole() const;
  bool is_finite() const { return !cofinite_; }
  OmegaSet complement() const;

  friend bool operator==(const OmegaSet&, const OmegaSet&) = default;
  std::string str() const;

 private:
  OmegaSet(bool cofinite, std::set<unsigned> nats, bool inf)
      : cofinite_(cofinite), nats_(std::move(nats)), inf_(inf) {}
  bool cofinite_ = false;
  std::set<unsigned> nats_;  // members if finite kind, missing naturals if cofinite kind
  bool inf_ = false;
};

enum class Topology { Zariski, Constructible };

// A spectral-space presentation: a finite poset or the ω+1 chain, with a
// topology selector.
struct SpectralSpaceDesc {
  std::variant<OmegaChain, FinitePoset> space;
  Topology topology = Topology::Zariski;

  static SpectralSpaceDesc poset(FinitePoset p, Topology t = Topology::Zariski) {
    return {std::move(p), t};
  }
  static SpectralSpaceDesc omega(Topology t = Topology::Zariski) { return {OmegaChain{}, t}; }
  // "omega-chain" or "poset:a<b,a<c"
  static SpectralSpaceDesc parse(const std::string& descriptor, Topology t = Topology::Zariski);

  bool is_omega() const { return std::holds_alternative<OmegaChain>(space); }
  const FinitePoset& as_poset() const { return std::get<FinitePoset>(space); }
  friend bool operator==(const SpectralSpaceDesc&, const SpectralSpaceDesc&) = default;
};

// Point set descriptor: a subset of poset points, or an OmegaSet.
using SetDesc = std::variant<std::set<size_t>, OmegaSet>;

bool is_closed(const SpectralSpaceDesc& space, const SetDesc& s);
bool is_open(const SpectralSpaceDesc& space, const SetDesc& s);
bool is_quasi_compact(const SpectralSpaceDesc& space, const SetDesc& s);

SpectralSpaceDesc patch(const SpectralSpaceDesc& space);
bool is_hausdorff(const SpectralSpaceDesc& space);

// Point of a described space.
using Point = std::variant<size_t, OmegaPoint>;

// Map rule: identity, an explicit image list for finite domains, or an
// eventually-constant description for ω+1 domains.
struct FiniteRule {
  std::vector<Point> images;
  friend bool operator==(const FiniteRule&, const FiniteRule&) = default;
};
struct OmegaRule {
  std::map<unsigned, Point> exceptions;
  Point tail;       // image of all large naturals
  Point inf_image;  // image of ∞
  friend bool operator==(const OmegaRule&, const OmegaRule&) = default;
};
struct IdentityRule {
  friend bool operator==(const IdentityRule&, const IdentityRule&) = default;
};

struct SpectralMap {
  SpectralSpaceDesc domain;
  SpectralSpaceDesc codomain;
  std::variant<IdentityRule, FiniteRule, OmegaRule> rule;

  Point apply(const Point& p) const;
};

// True iff the map is continuous and preimages of quasi-compact opens are
// quasi-compact, decided from the finite descriptions.
bool check_spectral_map(const SpectralMap& m);

}  // namespace tenspec::spectral

#include "tenspec/boolflat.hpp"

#include <algorithm>
#include <stdexcept>

namespace tenspec::boolflat {

namespace {

bool is_prime_number(unsigned n) {
  if (n < 2) return false;
  for (unsigned d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

Rational field_normalize(const FieldDesc& f, const Rational& x) {
  if (f.p == 0) return x;
  // num * den^{-1} mod p
  const BigInt p(static_cast<long>(f.p));
  BigInt den_mod = x.den() % p;
  if (den_mod == 0) throw std::domain_error("field_normalize: denominator divisible by p");
  BigInt inv;
  if (mpz_invert(inv.get_mpz_t(), den_mod.get_mpz_t(), p.get_mpz_t()) == 0)
    throw std::domain_error("field_normalize: no inverse");
  BigInt r = (x.num() % p) * inv % p;
  if (r < 0) r += p;
  return Rational(r);
}

Rational field_add(const FieldDesc& f, const Rational& a, const Rational& b) {
  return field_normalize(f, a + b);
}
Rational field_mul(const FieldDesc& f, const Rational& a, const Rational& b) {
  return field_normalize(f, a * b);
}
Rational field_neg(const FieldDesc& f, const Rational& a) { return field_normalize(f, -a); }

Rational field_inv(const FieldDesc& f, const Rational& a) {
  const Rational n = field_normalize(f, a);
  if (n.is_zero()) throw std::domain_error("field_inv: zero");
  if (f.p == 0) return n.inverse();
  return field_normalize(f, Rational(BigInt(1), n.num()));
}

ProductRing::ProductRing(std::vector<FieldDesc> factors) : factors_(std::move(factors)) {
  if (factors_.empty()) throw std::invalid_argument("ProductRing: at least one factor required");
  for (const auto& f : factors_)
    if (f.p != 0 && !is_prime_number(f.p))
      throw std::invalid_argument("ProductRing: " + std::to_string(f.p) + " is not prime");
}

ProductRing ProductRing::parse(const std::string& descriptor) {
  std::vector<FieldDesc> factors;
  std::string s;
  for (char c : descriptor)
    if (!isspace(static_cast<unsigned char>(c))) s.push_back(tolower(static_cast<unsigned char>(c)));
  size_t pos = 0;
  while (pos < s.size()) {
    size_t next = s.find('x', pos);
    std::string tok = s.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
    pos = next == std::string::npos ? s.size() : next + 1;
    unsigned reps = 1;
    if (auto caret = tok.find('^'); caret != std::string::npos) {
      reps = std::stoul(tok.substr(caret + 1));
      tok = tok.substr(0, caret);
    }
    FieldDesc f;
    if (tok == "q") {
      f.p = 0;
    } else if (!tok.empty() && tok[0] == 'f') {
      f.p = std::stoul(tok.substr(1));
    } else {
      throw std::invalid_argument("ProductRing: cannot parse factor '" + tok + "'");
    }
    for (unsigned i = 0; i < reps; ++i) factors.push_back(f);
  }
  return ProductRing(std::move(factors));
}

std::string ProductRing::str() const {
  std::string out;
  for (size_t i = 0; i < factors_.size(); ++i) {
    if (i) out += "x";
    out += factors_[i].str();
  }
  return out;
}

ProductRing::Elem ProductRing::normalize(Elem e) const {
  if (e.size() != size()) throw std::invalid_argument("ProductRing: coordinate count mismatch");
  for (size_t i = 0; i < e.size(); ++i) e[i] = field_normalize(factors_[i], e[i]);
  return e;
}

ProductRing::Elem ProductRing::add(const Elem& a, const Elem& b) const {
  Elem r(size());
  for (size_t i = 0; i < size(); ++i) r[i] = field_add(factors_[i], a[i], b[i]);
  return r;
}

ProductRing::Elem ProductRing::mul(const Elem& a, const Elem& b) const {
  Elem r(size());
  for (size_t i = 0; i < size(); ++i) r[i] = field_mul(factors_[i], a[i], b[i]);
  return r;
}

ProductRing::Elem ProductRing::neg(const Elem& a) const {
  Elem r(size());
  for (size_t i = 0; i < size(); ++i) r[i] = field_neg(factors_[i], a[i]);
  return r;
}

bool ProductRing::is_idempotent(const Elem& e) const { return mul(e, e) == normalize(e); }

BoolElem BoolElem::from_elem(const ProductRing& ring, const RingElem& e) {
  if (!ring.is_idempotent(e)) throw std::invalid_argument("BoolElem: element is not idempotent");
  std::set<size_t> support;
  const auto n = ring.normalize(e);
  for (size_t i = 0; i < n.size(); ++i)
    if (!n[i].is_zero()) support.insert(i);
  return BoolElem(std::move(support));
}

BoolElem BoolElem::bxor(const BoolElem& o) const {
  std::set<size_t> s;
  std::set_symmetric_difference(support_.begin(), support_.end(), o.support_.begin(),
                                o.support_.end(), std::inserter(s, s.begin()));
  return BoolElem(std::move(s));
}

BoolElem BoolElem::band(const BoolElem& o) const {
  std::set<size_t> s;
  std::set_intersection(support_.begin(), support_.end(), o.support_.begin(), o.support_.end(),
                        std::inserter(s, s.begin()));
  return BoolElem(std::move(s));
}

BoolElem BoolElem::complement(size_t universe) const {
  std::set<size_t> s;
  for (size_t i = 0; i < universe; ++i)
    if (!support_.count(i)) s.insert(i);
  return BoolElem(std::move(s));
}

bool BoolElem::orthogonal_to(const BoolElem& o) const { return band(o).is_zero(); }

bool BoolElem::subset_of(const BoolElem& o) const {
  return std::includes(o.support_.begin(), o.support_.end(), support_.begin(), support_.end());
}

RingElem BoolElem::to_elem(const ProductRing& ring) const {
  RingElem e = ring.zero();
  for (size_t i : support_) {
    if (i >= ring.size()) throw std::invalid_argument("BoolElem: support outside ring");
    e[i] = Rational(1);
  }
  return e;
}

std::string BoolElem::str() const {
  std::string out = "{";
  bool first = true;
  for (size_t i : support_) {
    if (!first) out += ",";
    out += std::to_string(i + 1);
    first = false;
  }
  return out + "}";
}

RingIdeal::RingIdeal(const ProductRing& ring, const std::vector<RingElem>& generators) {
  for (const auto& g : generators) {
    const auto n = ring.normalize(g);
    for (size_t i = 0; i < n.size(); ++i)
      if (!n[i].is_zero()) subset_.insert(i);
  }
}

RingIdeal RingIdeal::from_subset(std::set<size_t> subset) {
  RingIdeal ideal;
  ideal.subset_ = std::move(subset);
  return ideal;
}

bool RingIdeal::contains(const ProductRing& ring, const RingElem& e) const {
  const auto n = ring.normalize(e);
  for (size_t i = 0; i < n.size(); ++i)
    if (!n[i].is_zero() && !subset_.count(i)) return false;
  return true;
}

bool RingIdeal::is_prime(size_t factor_count) const { return subset_.size() + 1 == factor_count; }

namespace {

// Boolean-ring arithmetic realized with genuine ring operations on
// idempotents: e (+) f = e + f - 2ef, complement = 1 (+) e.
struct RingBool {
  const ProductRing& ring;
  RingElem bxor(const RingElem& a, const RingElem& b) const {
    auto twice = ring.add(ring.mul(a, b), ring.mul(a, b));
    return ring.add(ring.add(a, b), ring.neg(twice));
  }
  RingElem band(const RingElem& a, const RingElem& b) const { return ring.mul(a, b); }
  RingElem complement(const RingElem& a) const { return bxor(ring.one(), a); }
};

}  // namespace

Orthogonalized orthogonalize(const ProductRing& ring, const std::vector<BoolElem>& gens) {
  if (gens.empty()) throw std::invalid_argument("orthogonalize: no generators");
  const RingBool B{ring};
  std::vector<RingElem> ortho{gens[0].to_elem(ring)};
  for (size_t n = 1; n < gens.size(); ++n) {
    const RingElem en = gens[n].to_elem(ring);
    std::vector<RingElem> next;
    RingElem sum = ring.zero();
    for (const auto& oi : ortho) {
      next.push_back(B.band(oi, en));                 // f_i = e_i e_n
      sum = B.bxor(sum, oi);                          // previous family is orthogonal
    }
    for (const auto& oi : ortho) next.push_back(B.band(oi, B.complement(en)));  // g_i
    next.push_back(B.band(B.complement(sum), en));    // h
    ortho.clear();
    for (auto& e : next) {
      if (!ring.is_idempotent(e)) throw std::logic_error("orthogonalize: non-idempotent output");
      if (BoolElem::from_elem(ring, e).is_zero()) continue;
      ortho.push_back(std::move(e));
    }
  }
  Orthogonalized out;
  BoolElem principal;
  for (const auto& e : ortho) {
    const auto b = BoolElem::from_elem(ring, e);
    out.orthogonal.push_back(b);
    principal = principal.bxor(b);
  }
  out.principal = principal;
  return out;
}

std::vector<BoolElem> all_idempotents(size_t factor_count) {
  if (factor_count > 24) throw std::invalid_argument("all_idempotents: too many factors");
  std::vector<BoolElem> out;
  out.reserve(1u << factor_count);
  for (uint32_t mask = 0; mask < (1u << factor_count); ++mask) {
    std::set<size_t> s;
    for (size_t i = 0; i < factor_count; ++i)
      if (mask & (1u << i)) s.insert(i);
    out.emplace_back(std::move(s));
  }
  return out;
}

std::set<BoolElem> idempotents_of_ideal(const ProductRing& ring, const RingIdeal& ideal) {
  std::set<BoolElem> out;
  for (const auto& e : all_idempotents(ring.size()))
    if (ideal.contains(ring, e.to_elem(ring))) out.insert(e);
  return out;
}

RingIdeal ideal_of_idempotents(const ProductRing& ring, const std::set<BoolElem>& J) {
  // ideal check: contains 0, meet-closed against everything, xor of
  // orthogonal members stays inside
  if (!J.count(BoolElem{}))
    throw std::invalid_argument("ideal_of_idempotents: missing zero element");
  const auto universe = all_idempotents(ring.size());
  for (const auto& e : J) {
    for (const auto& b : universe)
      if (!J.count(e.band(b)))
        throw std::invalid_argument("ideal_of_idempotents: not closed under meet");
    for (const auto& f : J)
      if (e.orthogonal_to(f) && !J.count(e.bxor(f)))
        throw std::invalid_argument("ideal_of_idempotents: not closed under orthogonal sums");
  }
  std::vector<RingElem> gens;
  for (const auto& e : J) gens.push_back(e.to_elem(ring));
  return RingIdeal(ring, gens);
}

std::vector<Rational> cont_iso_apply(const ProductRing& ring, const RingElem& a) {
  for (const auto& f : ring.factors())
    if (!(f == ring.factor(0)))
      throw std::invalid_argument("cont_iso: mixed factor fields");
  return ring.normalize(a);
}

RingElem cont_iso_inverse(const ProductRing& ring, const std::vector<Rational>& values) {
  for (const auto& f : ring.factors())
    if (!(f == ring.factor(0)))
      throw std::invalid_argument("cont_iso: mixed factor fields");
  return ring.normalize(values);
}

bool verify_ideal_correspondence(const ProductRing& ring) {
  const size_t k = ring.size();
  // every Boolean ideal of B(R) is the powerset of a subset; sweep them all
  for (const auto& top : all_idempotents(k)) {
    std::set<BoolElem> J;
    for (const auto& e : all_idempotents(k))
      if (e.subset_of(top)) J.insert(e);
    const RingIdeal ideal = ideal_of_idempotents(ring, J);
    if (ideal.subset() != top.support()) return false;
    if (idempotents_of_ideal(ring, ideal) != J) return false;
  }
  // and from the ring side
  for (const auto& top : all_idempotents(k)) {
    const RingIdeal ideal = RingIdeal::from_subset(top.support());
    const auto J = idempotents_of_ideal(ring, ideal);
    if (!(ideal_of_idempotents(ring, J) == ideal)) return false;
  }
  return true;
}

bool verify_cont_iso(const ProductRing& ring) {
  const size_t k = ring.size();
  std::vector<RingElem> samples;
  for (const auto& e : all_idempotents(k)) samples.push_back(e.to_elem(ring));
  for (long base = -2; base <= 2; ++base) {
    RingElem e = ring.zero();
    for (size_t i = 0; i < k; ++i) e[i] = Rational(base + static_cast<long>(i));
    samples.push_back(ring.normalize(e));
  }
  for (const auto& a : samples) {
    // bijectivity through the two round trips
    if (cont_iso_inverse(ring, cont_iso_apply(ring, a)) != ring.normalize(a)) return false;
    for (const auto& b : samples) {
      const auto sum = cont_iso_apply(ring, ring.add(a, b));
      const auto prod = cont_iso_apply(ring, ring.mul(a, b));
      const auto fa = cont_iso_apply(ring, a), fb = cont_iso_apply(ring, b);
      for (size_t i = 0; i < k; ++i) {
        if (sum[i] != field_add(ring.factor(i), fa[i], fb[i])) return false;
        if (prod[i] != field_mul(ring.factor(i), fa[i], fb[i])) return false;
      }
    }
  }
  return true;
}

}  // namespace tenspec::boolflat

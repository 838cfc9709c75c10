#include "tenspec/wbcat.hpp"

#include <algorithm>
#include <stdexcept>

#include <json.hpp>

namespace tenspec::wbcat {

Word Word::parse(const std::string& s) {
  std::vector<Letter> letters;
  letters.reserve(s.size());
  for (char c : s) {
    switch (tolower(static_cast<unsigned char>(c))) {
      case 'u': letters.push_back(Letter::Up); break;
      case 'd': letters.push_back(Letter::Down); break;
      default: throw std::invalid_argument("Word: letters must be u or d");
    }
  }
  return Word(std::move(letters));
}

int Word::balance() const {
  int b = 0;
  for (Letter l : l_) b += l == Letter::Up ? 1 : -1;
  return b;
}

Word Word::dual() const {
  std::vector<Letter> out(l_.rbegin(), l_.rend());
  for (Letter& l : out) l = flip(l);
  return Word(std::move(out));
}

Word Word::tensor(const Word& o) const {
  std::vector<Letter> out = l_;
  out.insert(out.end(), o.l_.begin(), o.l_.end());
  return Word(std::move(out));
}

Word Word::ups(size_t r) { return Word(std::vector<Letter>(r, Letter::Up)); }

std::string Word::str() const {
  std::string out;
  for (Letter l : l_) out += l == Letter::Up ? 'u' : 'd';
  return out;
}

WBDiagram::WBDiagram(std::vector<std::pair<uint16_t, uint16_t>> edges) : e_(std::move(edges)) {
  for (auto& [a, b] : e_)
    if (a > b) std::swap(a, b);
  std::sort(e_.begin(), e_.end());
}

uint16_t WBDiagram::partner(uint16_t node) const {
  for (const auto& [a, b] : e_) {
    if (a == node) return b;
    if (b == node) return a;
  }
  throw std::invalid_argument("WBDiagram: node has no partner");
}

std::string WBDiagram::str() const {
  std::string out;
  for (size_t i = 0; i < e_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(e_[i].first) + "-" + std::to_string(e_[i].second);
  }
  return out;
}

std::string WBDiagram::str(size_t m) const {
  auto name = [m](uint16_t node) {
    return node < m ? "s" + std::to_string(node) : "t" + std::to_string(node - m);
  };
  std::string out;
  for (size_t i = 0; i < e_.size(); ++i) {
    if (i) out += ",";
    out += name(e_[i].first) + "-" + name(e_[i].second);
  }
  return out;
}

namespace {

Letter node_letter(const Word& w, const Word& w2, uint16_t node) {
  return node < w.size() ? w.at(node) : w2.at(node - w.size());
}

bool edge_ok(const Word& w, const Word& w2, uint16_t a, uint16_t b) {
  const size_t m = w.size();
  const Letter la = node_letter(w, w2, a), lb = node_letter(w, w2, b);
  const bool a_src = a < m, b_src = b < m;
  if (a_src == b_src) return la != lb;  // cap or cup pairs opposite letters
  return la == lb;                      // through strand keeps the letter
}

void enumerate_rec(const Word& w, const Word& w2, std::vector<bool>& used,
                   std::vector<std::pair<uint16_t, uint16_t>>& edges,
                   std::vector<WBDiagram>& out) {
  const size_t total = used.size();
  size_t first = 0;
  while (first < total && used[first]) ++first;
  if (first == total) {
    out.emplace_back(edges);
    return;
  }
  used[first] = true;
  for (size_t b = first + 1; b < total; ++b) {
    if (used[b] || !edge_ok(w, w2, first, b)) continue;
    used[b] = true;
    edges.emplace_back(static_cast<uint16_t>(first), static_cast<uint16_t>(b));
    enumerate_rec(w, w2, used, edges, out);
    edges.pop_back();
    used[b] = false;
  }
  used[first] = false;
}

}  // namespace

std::vector<WBDiagram> enumerate_diagrams(const Word& w, const Word& w2) {
  if (w.balance() != w2.balance()) return {};
  std::vector<bool> used(w.size() + w2.size(), false);
  std::vector<std::pair<uint16_t, uint16_t>> edges;
  std::vector<WBDiagram> out;
  enumerate_rec(w, w2, used, edges, out);
  return out;
}

bool diagram_valid(const WBDiagram& d, const Word& w, const Word& w2) {
  const size_t total = w.size() + w2.size();
  if (d.edges().size() * 2 != total) return false;
  std::vector<bool> seen(total, false);
  for (const auto& [a, b] : d.edges()) {
    if (a >= total || b >= total || a == b || seen[a] || seen[b]) return false;
    if (!edge_ok(w, w2, a, b)) return false;
    seen[a] = seen[b] = true;
  }
  return true;
}

const Rational& Parameter::alpha() const {
  if (!alpha_) throw std::invalid_argument("Parameter: generic session has no alpha");
  return *alpha_;
}

Scalar Parameter::zero() const {
  return is_generic() ? Scalar::generic(Poly()) : Scalar::specialized(Rational(0));
}

Scalar Parameter::one() const { return from_rational(Rational(1)); }

Scalar Parameter::from_rational(const Rational& c) const {
  return is_generic() ? Scalar::generic(Poly(c)) : Scalar::specialized(c);
}

Scalar Parameter::loop_factor(unsigned loops) const {
  if (is_generic()) return Scalar::generic(Poly::t(loops));
  return Scalar::specialized(alpha().pow(loops));
}

std::string Parameter::str() const { return is_generic() ? "generic" : alpha().str(); }

WBMorphism::WBMorphism(Word source, Word target, Parameter param)
    : src_(std::move(source)), dst_(std::move(target)), param_(std::move(param)) {}

WBMorphism WBMorphism::zero(Word source, Word target, Parameter param) {
  return WBMorphism(std::move(source), std::move(target), std::move(param));
}

WBMorphism WBMorphism::single(Word source, Word target, Parameter param, WBDiagram d,
                              Scalar coeff) {
  WBMorphism f(std::move(source), std::move(target), std::move(param));
  if (!diagram_valid(d, f.src_, f.dst_))
    throw std::invalid_argument("WBMorphism: diagram does not match the words");
  f.add_term(d, coeff);
  return f;
}

WBMorphism WBMorphism::identity(const Word& w, const Parameter& param) {
  std::vector<std::pair<uint16_t, uint16_t>> edges;
  for (size_t i = 0; i < w.size(); ++i)
    edges.emplace_back(static_cast<uint16_t>(i), static_cast<uint16_t>(w.size() + i));
  WBMorphism f(w, w, param);
  f.add_term(WBDiagram(std::move(edges)), param.one());
  return f;
}

WBMorphism& WBMorphism::add_term(const WBDiagram& d, const Scalar& c) {
  if (c.is_generic() != param_.is_generic())
    throw std::invalid_argument("WBMorphism: coefficient variant does not match session");
  if (c.is_zero()) return *this;
  auto it = terms_.find(d);
  if (it == terms_.end()) {
    terms_.emplace(d, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
  return *this;
}

WBMorphism WBMorphism::operator+(const WBMorphism& o) const {
  if (src_ != o.src_ || dst_ != o.dst_) throw std::invalid_argument("WBMorphism: word mismatch");
  if (!(param_ == o.param_)) throw std::invalid_argument("WBMorphism: parameter mismatch");
  WBMorphism out = *this;
  for (const auto& [d, c] : o.terms_) out.add_term(d, c);
  return out;
}

WBMorphism WBMorphism::operator-() const {
  WBMorphism out(src_, dst_, param_);
  for (const auto& [d, c] : terms_) out.terms_.emplace(d, -c);
  return out;
}

WBMorphism WBMorphism::scale(const Rational& c) const {
  WBMorphism out(src_, dst_, param_);
  if (c.is_zero()) return out;
  for (const auto& [d, s] : terms_) out.terms_.emplace(d, s.scale(c));
  return out;
}

WBMorphism WBMorphism::scale(const Scalar& c) const {
  WBMorphism out(src_, dst_, param_);
  if (c.is_zero()) return out;
  for (const auto& [d, s] : terms_) out.add_term(d, s * c);
  return out;
}

std::vector<Rational> WBMorphism::coefficient_vector() const {
  if (param_.is_generic())
    throw std::invalid_argument("coefficient_vector: specialized sessions only");
  const auto basis = enumerate_diagrams(src_, dst_);
  std::vector<Rational> out(basis.size(), Rational(0));
  for (const auto& [d, c] : terms_) {
    const auto it = std::lower_bound(basis.begin(), basis.end(), d);
    if (it == basis.end() || *it != d)
      throw std::logic_error("coefficient_vector: term outside canonical basis");
    out[it - basis.begin()] = c.rat();
  }
  return out;
}

WBMorphism WBMorphism::from_coefficients(const Word& w, const Word& w2, const Parameter& param,
                                         const std::vector<Rational>& coeffs) {
  const auto basis = enumerate_diagrams(w, w2);
  if (coeffs.size() != basis.size())
    throw std::invalid_argument("from_coefficients: wrong coefficient count");
  WBMorphism f(w, w2, param);
  for (size_t i = 0; i < basis.size(); ++i)
    if (!coeffs[i].is_zero()) f.add_term(basis[i], param.from_rational(coeffs[i]));
  return f;
}

WBMorphism WBMorphism::specialize(const Rational& alpha) const {
  if (!param_.is_generic()) {
    if (param_.alpha() != alpha)
      throw std::invalid_argument("specialize: session is fixed at a different value");
    return *this;
  }
  WBMorphism out(src_, dst_, Parameter::at(alpha));
  for (const auto& [d, c] : terms_)
    out.add_term(d, Scalar::specialized(c.eval(alpha)));
  return out;
}

std::string WBMorphism::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [d, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += "(" + c.str() + ")[" + d.str(src_.size()) + "]";
  }
  return out;
}

namespace {

struct Stacked {
  std::vector<std::pair<uint16_t, uint16_t>> edges;
  unsigned loops = 0;
};

// Stack df (bottom) under dg (top) along a shared middle word of length k and
// trace the strands. Bottom nodes 0..m-1, middle m..m+k-1, top m+k..m+k+n-1.
Stacked stack_diagrams(const WBDiagram& df, const WBDiagram& dg, size_t m, size_t k, size_t n) {
  struct Edge {
    uint16_t u, v;
  };
  std::vector<Edge> edges;
  edges.reserve(df.edges().size() + dg.edges().size());
  for (const auto& [a, b] : df.edges())  // f: bottom/middle, nodes < m are bottom
    edges.push_back({a, b});
  for (const auto& [a, b] : dg.edges())  // g: middle/top, shift by m
    edges.push_back({static_cast<uint16_t>(a + m), static_cast<uint16_t>(b + m)});

  const size_t total = m + k + n;
  std::vector<std::vector<size_t>> incident(total);
  for (size_t e = 0; e < edges.size(); ++e) {
    incident[edges[e].u].push_back(e);
    incident[edges[e].v].push_back(e);
  }
  auto is_outer = [&](uint16_t node) { return node < m || node >= m + k; };

  std::vector<bool> used(edges.size(), false);
  Stacked out;
  for (size_t s = 0; s < total; ++s) {
    const uint16_t start = static_cast<uint16_t>(s);
    if (!is_outer(start)) continue;
    // outer nodes carry exactly one edge
    const size_t e0 = incident[start][0];
    if (used[e0]) continue;
    uint16_t cur = start;
    size_t edge = e0;
    for (;;) {
      used[edge] = true;
      const uint16_t next = edges[edge].u == cur ? edges[edge].v : edges[edge].u;
      if (is_outer(next)) {
        // composite numbering: bottom i -> i, top j -> m + (j - (m + k))
        auto outer_id = [&](uint16_t node) {
          return node < m ? node : static_cast<uint16_t>(node - k);
        };
        out.edges.emplace_back(outer_id(start), outer_id(next));
        break;
      }
      const auto& inc = incident[next];
      edge = inc[0] == edge ? inc[1] : inc[0];
      cur = next;
    }
  }
  // remaining edges lie on closed middle loops
  for (size_t e = 0; e < edges.size(); ++e) {
    if (used[e]) continue;
    size_t edge = e;
    uint16_t cur = edges[e].u;
    while (!used[edge]) {
      used[edge] = true;
      const uint16_t next = edges[edge].u == cur ? edges[edge].v : edges[edge].u;
      const auto& inc = incident[next];
      edge = inc[0] == edge ? inc[1] : inc[0];
      cur = next;
    }
    ++out.loops;
  }
  return out;
}

}  // namespace

WBMorphism compose(const WBMorphism& g, const WBMorphism& f) {
  if (f.target() != g.source()) throw std::invalid_argument("compose: word mismatch");
  if (!(f.param() == g.param())) throw std::invalid_argument("compose: parameter mismatch");
  const size_t m = f.source().size(), k = f.target().size(), n = g.target().size();
  WBMorphism out(f.source(), g.target(), f.param());
  for (const auto& [df, cf] : f.terms()) {
    for (const auto& [dg, cg] : g.terms()) {
      auto stacked = stack_diagrams(df, dg, m, k, n);
      out.add_term(WBDiagram(std::move(stacked.edges)),
                   cf * cg * f.param().loop_factor(stacked.loops));
    }
  }
  return out;
}

WBMorphism tensor(const WBMorphism& f, const WBMorphism& g) {
  if (!(f.param() == g.param())) throw std::invalid_argument("tensor: parameter mismatch");
  const size_t m1 = f.source().size(), n1 = f.target().size();
  const size_t m2 = g.source().size(), n2 = g.target().size();
  const Word src = f.source().tensor(g.source());
  const Word dst = f.target().tensor(g.target());
  WBMorphism out(src, dst, f.param());
  auto shift_f = [&](uint16_t x) {
    return x < m1 ? x : static_cast<uint16_t>(x + m2);
  };
  auto shift_g = [&](uint16_t x) {
    return x < m2 ? static_cast<uint16_t>(x + m1) : static_cast<uint16_t>(x + m1 + n1);
  };
  for (const auto& [df, cf] : f.terms()) {
    for (const auto& [dg, cg] : g.terms()) {
      std::vector<std::pair<uint16_t, uint16_t>> edges;
      edges.reserve(df.edges().size() + dg.edges().size());
      for (const auto& [a, b] : df.edges()) edges.emplace_back(shift_f(a), shift_f(b));
      for (const auto& [a, b] : dg.edges()) edges.emplace_back(shift_g(a), shift_g(b));
      out.add_term(WBDiagram(std::move(edges)), cf * cg);
    }
  }
  return out;
}

WBMorphism cup(const Word& two_letters, const Parameter& param) {
  if (two_letters.size() != 2 || two_letters.balance() != 0)
    throw std::invalid_argument("cup: target must be one up and one down letter");
  WBMorphism f(Word(), two_letters, param);
  f.add_term(WBDiagram({{0, 1}}), param.one());
  return f;
}

WBMorphism cap(const Word& two_letters, const Parameter& param) {
  if (two_letters.size() != 2 || two_letters.balance() != 0)
    throw std::invalid_argument("cap: source must be one up and one down letter");
  WBMorphism f(two_letters, Word(), param);
  f.add_term(WBDiagram({{0, 1}}), param.one());
  return f;
}

WBMorphism braiding(const Word& left, const Word& right, const Parameter& param) {
  const size_t a = left.size(), b = right.size();
  const size_t m = a + b;
  std::vector<std::pair<uint16_t, uint16_t>> edges;
  for (size_t i = 0; i < a; ++i)
    edges.emplace_back(static_cast<uint16_t>(i), static_cast<uint16_t>(m + b + i));
  for (size_t j = 0; j < b; ++j)
    edges.emplace_back(static_cast<uint16_t>(a + j), static_cast<uint16_t>(m + j));
  WBMorphism f(left.tensor(right), right.tensor(left), param);
  f.add_term(WBDiagram(std::move(edges)), param.one());
  return f;
}

namespace {

// Bending a morphism to its name (and back) relabels node p < m to m-1-p.
WBDiagram bend_edges(const WBDiagram& d, size_t m) {
  std::vector<std::pair<uint16_t, uint16_t>> edges;
  edges.reserve(d.edges().size());
  auto remap = [m](uint16_t x) {
    return x < m ? static_cast<uint16_t>(m - 1 - x) : x;
  };
  for (const auto& [a, b] : d.edges()) edges.emplace_back(remap(a), remap(b));
  return WBDiagram(std::move(edges));
}

}  // namespace

WBMorphism adjoint_name(const WBMorphism& f) {
  const size_t m = f.source().size();
  WBMorphism out(Word(), f.source().dual().tensor(f.target()), f.param());
  for (const auto& [d, c] : f.terms()) out.add_term(bend_edges(d, m), c);
  return out;
}

WBMorphism unbend_name(const WBMorphism& name, const Word& source) {
  const size_t m = source.size();
  if (!name.source().empty() || name.target().size() < m)
    throw std::invalid_argument("unbend_name: not a name morphism");
  Word dual_part(std::vector<Letter>{});
  {
    std::vector<Letter> letters;
    for (size_t i = 0; i < m; ++i) letters.push_back(name.target().at(i));
    dual_part = Word(std::move(letters));
  }
  if (dual_part != source.dual())
    throw std::invalid_argument("unbend_name: target does not start with dual(source)");
  std::vector<Letter> rest;
  for (size_t i = m; i < name.target().size(); ++i) rest.push_back(name.target().at(i));
  WBMorphism out(source, Word(std::move(rest)), name.param());
  for (const auto& [d, c] : name.terms()) out.add_term(bend_edges(d, m), c);
  return out;
}

Scalar trace(const WBMorphism& f) {
  if (f.source() != f.target()) throw std::invalid_argument("trace: not an endomorphism");
  const size_t L = f.source().size();
  Scalar acc = f.param().zero();
  for (const auto& [d, c] : f.terms()) {
    // closure edges i -- (L + i), all nodes degree 2: count cycles
    std::vector<std::pair<uint16_t, uint16_t>> edges = d.edges();
    for (size_t i = 0; i < L; ++i)
      edges.emplace_back(static_cast<uint16_t>(i), static_cast<uint16_t>(L + i));
    std::vector<std::vector<size_t>> incident(2 * L);
    for (size_t e = 0; e < edges.size(); ++e) {
      incident[edges[e].first].push_back(e);
      incident[edges[e].second].push_back(e);
    }
    std::vector<bool> used(edges.size(), false);
    unsigned cycles = 0;
    for (size_t e = 0; e < edges.size(); ++e) {
      if (used[e]) continue;
      size_t edge = e;
      uint16_t cur = edges[e].first;
      while (!used[edge]) {
        used[edge] = true;
        const uint16_t next = edges[edge].first == cur ? edges[edge].second : edges[edge].first;
        const auto& inc = incident[next];
        edge = inc[0] == edge ? inc[1] : inc[0];
        cur = next;
      }
      ++cycles;
    }
    acc += c * f.param().loop_factor(cycles);
  }
  return acc;
}

Scalar trace_categorical(const WBMorphism& f) {
  if (f.source() != f.target()) throw std::invalid_argument("trace: not an endomorphism");
  const Word& w = f.source();
  const size_t L = w.size();
  const Parameter& param = f.param();
  if (L == 0) {
    Scalar acc = param.zero();
    for (const auto& [d, c] : f.terms()) acc += c;
    return acc;
  }
  // nested cups 1 -> w . dual(w), then f ⊗ id, then nested caps
  std::vector<std::pair<uint16_t, uint16_t>> cup_edges, cap_edges;
  for (size_t i = 0; i < L; ++i) {
    cup_edges.emplace_back(static_cast<uint16_t>(i), static_cast<uint16_t>(2 * L - 1 - i));
    cap_edges.emplace_back(static_cast<uint16_t>(i), static_cast<uint16_t>(2 * L - 1 - i));
  }
  const Word closed = w.tensor(w.dual());
  WBMorphism cups(Word(), closed, param);
  cups.add_term(WBDiagram(std::move(cup_edges)), param.one());
  WBMorphism caps(closed, Word(), param);
  caps.add_term(WBDiagram(std::move(cap_edges)), param.one());
  const WBMorphism middle = tensor(f, WBMorphism::identity(w.dual(), param));
  const WBMorphism scalar = compose(caps, compose(middle, cups));
  Scalar acc = param.zero();
  for (const auto& [d, c] : scalar.terms()) acc += c;  // End(1) is one-dimensional
  return acc;
}

WBMorphism embed_perm(const symgroup::Permutation& sigma, const Parameter& param) {
  const unsigned r = sigma.size();
  std::vector<std::pair<uint16_t, uint16_t>> edges;
  for (unsigned i = 0; i < r; ++i)
    edges.emplace_back(static_cast<uint16_t>(i), static_cast<uint16_t>(r + sigma(i)));
  WBMorphism f(Word::ups(r), Word::ups(r), param);
  f.add_term(WBDiagram(std::move(edges)), param.one());
  return f;
}

WBMorphism embed_group_alg(const symgroup::GroupAlgElem& x, const Parameter& param) {
  WBMorphism out = WBMorphism::zero(Word::ups(x.r()), Word::ups(x.r()), param);
  for (const auto& [sigma, c] : x.coeffs())
    out = out + embed_perm(sigma, param).scale(c);
  return out;
}

Scalar twisted_power_trace(const std::vector<Scalar>& power_traces,
                           const symgroup::GroupAlgElem& x) {
  if (power_traces.size() < x.r())
    throw std::invalid_argument("twisted_power_trace: profile shorter than r");
  if (power_traces.empty()) throw std::invalid_argument("twisted_power_trace: empty profile");
  const bool generic = power_traces[0].is_generic();
  const Scalar one = generic ? Scalar::generic(Poly(Rational(1))) : Scalar::specialized(Rational(1));
  Scalar acc = generic ? Scalar::generic(Poly()) : Scalar::specialized(Rational(0));
  for (const auto& [sigma, c] : x.coeffs()) {
    Scalar prod = one;
    for (const auto& cyc : symgroup::cycles(sigma)) prod *= power_traces[cyc.size() - 1];
    acc += prod.scale(c);
  }
  return acc;
}

Rational twisted_power_trace(const std::vector<Rational>& power_traces,
                             const symgroup::GroupAlgElem& x) {
  std::vector<Scalar> profile;
  profile.reserve(power_traces.size());
  for (const auto& p : power_traces) profile.push_back(Scalar::specialized(p));
  return twisted_power_trace(profile, x).rat();
}

std::string to_canonical_json(const WBMorphism& f) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [d, c] : f.terms()) {
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& [a, b] : d.edges())
      edges.push_back(std::to_string(a) + "-" + std::to_string(b));
    terms.push_back(nlohmann::json::array({edges, c.str()}));
  }
  const nlohmann::json doc{{"source", f.source().str()},
                           {"target", f.target().str()},
                           {"t", f.param().str()},
                           {"terms", terms}};
  return doc.dump();
}

}  // namespace tenspec::wbcat

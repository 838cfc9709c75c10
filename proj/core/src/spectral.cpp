#include "tenspec/spectral.hpp"

#include <algorithm>
#include <stdexcept>

namespace tenspec::spectral {

FinitePoset::FinitePoset(std::vector<std::string> points,
                         const std::vector<std::pair<size_t, size_t>>& less)
    : points_(std::move(points)) {
  const size_t n = points_.size();
  leq_.assign(n, std::vector<bool>(n, false));
  for (size_t i = 0; i < n; ++i) leq_[i][i] = true;
  for (auto [a, b] : less) {
    if (a >= n || b >= n) throw std::invalid_argument("FinitePoset: point index out of range");
    leq_[a][b] = true;
  }
  for (size_t k = 0; k < n; ++k)
    for (size_t i = 0; i < n; ++i)
      if (leq_[i][k])
        for (size_t j = 0; j < n; ++j)
          if (leq_[k][j]) leq_[i][j] = true;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      if (leq_[i][j] && leq_[j][i])
        throw std::invalid_argument("FinitePoset: relation is not antisymmetric");
}

FinitePoset FinitePoset::parse(const std::string& descriptor) {
  std::vector<std::string> names;
  std::vector<std::pair<size_t, size_t>> less;
  auto index_of = [&](const std::string& name) {
    for (size_t i = 0; i < names.size(); ++i)
      if (names[i] == name) return i;
    names.push_back(name);
    return names.size() - 1;
  };
  size_t pos = 0;
  while (pos <= descriptor.size()) {
    size_t comma = descriptor.find(',', pos);
    std::string tok = descriptor.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    pos = comma == std::string::npos ? descriptor.size() + 1 : comma + 1;
    if (tok.empty()) continue;
    if (auto lt = tok.find('<'); lt != std::string::npos) {
      const size_t a = index_of(tok.substr(0, lt));
      const size_t b = index_of(tok.substr(lt + 1));
      less.emplace_back(a, b);
    } else {
      index_of(tok);
    }
  }
  if (names.empty()) throw std::invalid_argument("FinitePoset: empty descriptor");
  return FinitePoset(std::move(names), less);
}

bool FinitePoset::is_up_closed(const std::set<size_t>& s) const {
  for (size_t x : s) {
    if (x >= size()) throw std::invalid_argument("FinitePoset: point out of range");
    for (size_t y = 0; y < size(); ++y)
      if (leq_[x][y] && !s.count(y)) return false;
  }
  return true;
}

OmegaSet OmegaSet::interval(unsigned r) {
  std::set<unsigned> members;
  for (unsigned i = 0; i <= r; ++i) members.insert(i);
  return finite(std::move(members));
}

bool OmegaSet::contains(const OmegaPoint& p) const {
  if (p.inf) return inf_;
  return cofinite_ ? !nats_.count(p.r) : nats_.count(p.r) > 0;
}

bool OmegaSet::is_empty() const { return !cofinite_ && nats_.empty() && !inf_; }
bool OmegaSet::is_whole() const { return cofinite_ && nats_.empty() && inf_; }

OmegaSet OmegaSet::complement() const { return OmegaSet(!cofinite_, nats_, !inf_); }

OmegaSet OmegaSet::parse(const std::string& descriptor) {
  std::string s;
  for (char c : descriptor)
    if (!isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s == "all") return whole();
  if (s == "{}") return empty();
  bool co = false, with_inf = true;
  if (s.rfind("co", 0) == 0) {
    co = true;
    s = s.substr(2);
    if (s.size() >= 4 && s.substr(s.size() - 4) == "-inf") {
      with_inf = false;
      s = s.substr(0, s.size() - 4);
    }
  }
  if (s.size() >= 5 && s[0] == '[') {
    // "[0,r]"
    const auto comma = s.find(',');
    if (s.back() != ']' || comma == std::string::npos || s.substr(1, comma - 1) != "0")
      throw std::invalid_argument("OmegaSet: bad interval '" + descriptor + "'");
    return interval(std::stoul(s.substr(comma + 1, s.size() - comma - 2)));
  }
  if (s.size() < 2 || s.front() != '{' || s.back() != '}')
    throw std::invalid_argument("OmegaSet: cannot parse '" + descriptor + "'");
  std::set<unsigned> nats;
  bool inf_member = false;
  std::string body = s.substr(1, s.size() - 2);
  size_t pos = 0;
  while (pos <= body.size() && !body.empty()) {
    size_t comma = body.find(',', pos);
    std::string tok = body.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    pos = comma == std::string::npos ? body.size() + 1 : comma + 1;
    if (tok == "inf")
      inf_member = true;
    else if (!tok.empty())
      nats.insert(std::stoul(tok));
  }
  if (co) return cofinite(std::move(nats), with_inf);
  return finite(std::move(nats), inf_member);
}

std::string OmegaSet::str() const {
  if (is_whole()) return "all";
  std::string body = "{";
  bool first = true;
  for (unsigned n : nats_) {
    if (!first) body += ",";
    body += std::to_string(n);
    first = false;
  }
  if (!cofinite_ && inf_) body += first ? "inf" : ",inf";
  body += "}";
  if (!cofinite_) return body;
  return "co" + body + (inf_ ? "" : "-inf");
}

SpectralSpaceDesc SpectralSpaceDesc::parse(const std::string& descriptor, Topology t) {
  if (descriptor == "omega-chain") return omega(t);
  if (descriptor.rfind("poset:", 0) == 0)
    return poset(FinitePoset::parse(descriptor.substr(6)), t);
  throw std::invalid_argument("SpectralSpaceDesc: cannot parse '" + descriptor + "'");
}

namespace {

const std::set<size_t>& finite_set(const SetDesc& s) {
  if (!std::holds_alternative<std::set<size_t>>(s))
    throw std::invalid_argument("set descriptor not expressible for this space");
  return std::get<std::set<size_t>>(s);
}

const OmegaSet& omega_set(const SetDesc& s) {
  if (!std::holds_alternative<OmegaSet>(s))
    throw std::invalid_argument("set descriptor not expressible for this space");
  return std::get<OmegaSet>(s);
}

}  // namespace

bool is_closed(const SpectralSpaceDesc& space, const SetDesc& s) {
  if (space.is_omega()) {
    const OmegaSet& o = omega_set(s);
    if (space.topology == Topology::Zariski) {
      // closed sets: empty, whole, and the intervals [0, r]
      if (o.is_empty() || o.is_whole()) return true;
      if (!o.is_finite() || o.contains_inf()) return false;
      const auto& m = o.exceptions();
      return *m.rbegin() + 1 == m.size();  // down-closed: members are 0..max
    }
    // one-point compactification of discrete N: closed = finite or contains inf
    return o.is_finite() || o.contains_inf();
  }
  const auto& p = space.as_poset();
  const auto& sub = finite_set(s);
  if (space.topology == Topology::Zariski) return p.is_up_closed(sub);
  return true;  // discrete
}

bool is_open(const SpectralSpaceDesc& space, const SetDesc& s) {
  if (space.is_omega()) return is_closed(space, SetDesc(omega_set(s).complement()));
  std::set<size_t> comp;
  const auto& sub = finite_set(s);
  for (size_t i = 0; i < space.as_poset().size(); ++i)
    if (!sub.count(i)) comp.insert(i);
  return is_closed(space, SetDesc(std::move(comp)));
}

bool is_quasi_compact(const SpectralSpaceDesc& space, const SetDesc& s) {
  if (!space.is_omega()) {
    finite_set(s);  // validates
    return true;
  }
  const OmegaSet& o = omega_set(s);
  if (space.topology == Topology::Zariski) return true;  // nested opens: any cover has a single covering member
  return o.is_finite() || o.contains_inf();
}

SpectralSpaceDesc patch(const SpectralSpaceDesc& space) {
  SpectralSpaceDesc out = space;
  out.topology = Topology::Constructible;
  return out;
}

bool is_hausdorff(const SpectralSpaceDesc& space) {
  if (space.topology == Topology::Constructible) return true;
  if (space.is_omega()) return false;  // closure of ∞ is everything
  const auto& p = space.as_poset();
  for (size_t i = 0; i < p.size(); ++i)
    for (size_t j = 0; j < p.size(); ++j)
      if (i != j && p.leq(i, j)) return false;
  return true;
}

Point SpectralMap::apply(const Point& p) const {
  if (std::holds_alternative<IdentityRule>(rule)) return p;
  if (const auto* fr = std::get_if<FiniteRule>(&rule)) {
    const size_t i = std::get<size_t>(p);
    if (i >= fr->images.size()) throw std::invalid_argument("SpectralMap: rule not total");
    return fr->images[i];
  }
  const auto& orule = std::get<OmegaRule>(rule);
  const auto& op = std::get<OmegaPoint>(p);
  if (op.inf) return orule.inf_image;
  if (auto it = orule.exceptions.find(op.r); it != orule.exceptions.end()) return it->second;
  return orule.tail;
}

namespace {

bool point_in(const SetDesc& s, const Point& p) {
  if (const auto* sub = std::get_if<std::set<size_t>>(&s)) return sub->count(std::get<size_t>(p)) > 0;
  return std::get<OmegaSet>(s).contains(std::get<OmegaPoint>(p));
}

// Exact preimage of a codomain subset under the map.
SetDesc preimage(const SpectralMap& m, const SetDesc& s) {
  if (std::holds_alternative<IdentityRule>(m.rule)) return s;
  if (const auto* fr = std::get_if<FiniteRule>(&m.rule)) {
    std::set<size_t> out;
    for (size_t i = 0; i < fr->images.size(); ++i)
      if (point_in(s, fr->images[i])) out.insert(i);
    return out;
  }
  const auto& orule = std::get<OmegaRule>(m.rule);
  const bool tail_in = point_in(s, orule.tail);
  const bool inf_in = point_in(s, orule.inf_image);
  std::set<unsigned> exc;
  for (const auto& [r, img] : orule.exceptions)
    if (point_in(s, img) != tail_in) exc.insert(r);
  if (tail_in) return OmegaSet::cofinite(std::move(exc), inf_in);
  return OmegaSet::finite(std::move(exc), inf_in);
}

// All points the rule can produce (finite for non-identity rules).
std::vector<Point> rule_image(const SpectralMap& m) {
  std::vector<Point> out;
  auto push = [&](const Point& p) {
    if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
  };
  if (const auto* fr = std::get_if<FiniteRule>(&m.rule)) {
    for (const auto& p : fr->images) push(p);
  } else if (const auto* orule = std::get_if<OmegaRule>(&m.rule)) {
    for (const auto& [r, img] : orule->exceptions) push(img);
    push(orule->tail);
    push(orule->inf_image);
  }
  return out;
}

// Representative closed subsets of the codomain: enough that every realizable
// intersection with the (finite) rule image occurs among them.
std::vector<SetDesc> representative_closed(const SpectralSpaceDesc& cod,
                                           const std::vector<Point>& image) {
  std::vector<SetDesc> out;
  if (!cod.is_omega()) {
    const size_t n = cod.as_poset().size();
    if (n > 16) throw std::invalid_argument("check_spectral_map: poset too large");
    for (uint32_t mask = 0; mask < (1u << n); ++mask) {
      std::set<size_t> s;
      for (size_t i = 0; i < n; ++i)
        if (mask & (1u << i)) s.insert(i);
      if (is_closed(cod, SetDesc(s))) out.emplace_back(std::move(s));
    }
    return out;
  }
  if (cod.topology == Topology::Zariski) {
    out.emplace_back(OmegaSet::empty());
    out.emplace_back(OmegaSet::whole());
    unsigned maxn = 0;
    for (const auto& p : image) {
      const auto& op = std::get<OmegaPoint>(p);
      if (!op.inf) maxn = std::max(maxn, op.r);
    }
    for (unsigned r = 0; r <= maxn + 1; ++r) out.emplace_back(OmegaSet::interval(r));
    return out;
  }
  // constructible: intersections with the image are arbitrary subsets of it,
  // each realized by a closed set
  const size_t k = image.size();
  for (uint32_t mask = 0; mask < (1u << k); ++mask) {
    std::set<unsigned> nats;
    bool with_inf = false;
    for (size_t i = 0; i < k; ++i) {
      if (!(mask & (1u << i))) continue;
      const auto& op = std::get<OmegaPoint>(image[i]);
      if (op.inf)
        with_inf = true;
      else
        nats.insert(op.r);
    }
    out.emplace_back(OmegaSet::finite(std::move(nats), with_inf));
  }
  return out;
}

// Representative quasi-compact open subsets of the codomain.
std::vector<SetDesc> representative_qc_opens(const SpectralSpaceDesc& cod,
                                             const std::vector<Point>& image) {
  std::vector<SetDesc> out;
  if (!cod.is_omega()) {
    const size_t n = cod.as_poset().size();
    if (n > 16) throw std::invalid_argument("check_spectral_map: poset too large");
    for (uint32_t mask = 0; mask < (1u << n); ++mask) {
      std::set<size_t> s;
      for (size_t i = 0; i < n; ++i)
        if (mask & (1u << i)) s.insert(i);
      if (is_open(cod, SetDesc(s))) out.emplace_back(std::move(s));  // finite: open => qc
    }
    return out;
  }
  if (cod.topology == Topology::Zariski) {
    out.emplace_back(OmegaSet::whole());
    unsigned maxn = 0;
    for (const auto& p : image) {
      const auto& op = std::get<OmegaPoint>(p);
      if (!op.inf) maxn = std::max(maxn, op.r);
    }
    for (unsigned r = 0; r <= maxn + 1; ++r)
      out.emplace_back(OmegaSet::interval(r).complement());  // (r, ∞]
    return out;
  }
  // constructible: qc opens are the clopens — finite subsets of N and
  // cofinite-with-∞ sets
  const size_t k = image.size();
  std::set<unsigned> image_nats;
  for (const auto& p : image) {
    const auto& op = std::get<OmegaPoint>(p);
    if (!op.inf) image_nats.insert(op.r);
  }
  for (uint32_t mask = 0; mask < (1u << k); ++mask) {
    std::set<unsigned> nats;
    bool with_inf = false;
    for (size_t i = 0; i < k; ++i) {
      if (!(mask & (1u << i))) continue;
      const auto& op = std::get<OmegaPoint>(image[i]);
      if (op.inf)
        with_inf = true;
      else
        nats.insert(op.r);
    }
    if (!with_inf) {
      out.emplace_back(OmegaSet::finite(std::move(nats)));
    } else {
      std::set<unsigned> missing;
      for (unsigned n : image_nats)
        if (!nats.count(n)) missing.insert(n);
      out.emplace_back(OmegaSet::cofinite(std::move(missing), true));
    }
  }
  return out;
}

void validate_rule(const SpectralMap& m) {
  if (std::holds_alternative<IdentityRule>(m.rule)) {
    if (!(m.domain == m.codomain))
      throw std::invalid_argument("SpectralMap: identity rule requires equal spaces");
    return;
  }
  auto check_point = [&](const Point& p) {
    if (m.codomain.is_omega() != std::holds_alternative<OmegaPoint>(p))
      throw std::invalid_argument("SpectralMap: image point has wrong kind");
    if (!m.codomain.is_omega() && std::get<size_t>(p) >= m.codomain.as_poset().size())
      throw std::invalid_argument("SpectralMap: image point out of range");
  };
  if (const auto* fr = std::get_if<FiniteRule>(&m.rule)) {
    if (m.domain.is_omega()) throw std::invalid_argument("SpectralMap: finite rule on omega domain");
    if (fr->images.size() != m.domain.as_poset().size())
      throw std::invalid_argument("SpectralMap: rule not total");
    for (const auto& p : fr->images) check_point(p);
  } else {
    if (!m.domain.is_omega()) throw std::invalid_argument("SpectralMap: omega rule on finite domain");
    const auto& orule = std::get<OmegaRule>(m.rule);
    check_point(orule.tail);
    check_point(orule.inf_image);
    for (const auto& [r, img] : orule.exceptions) check_point(img);
  }
}

}  // namespace

bool check_spectral_map(const SpectralMap& m) {
  validate_rule(m);
  if (std::holds_alternative<IdentityRule>(m.rule)) return true;
  const auto image = rule_image(m);
  for (const auto& closed : representative_closed(m.codomain, image))
    if (!is_closed(m.domain, preimage(m, closed))) return false;
  // preimages of quasi-compact opens must be quasi-compact; automatic unless
  // the domain carries the constructible omega topology
  if (m.domain.is_omega() && m.domain.topology == Topology::Constructible) {
    for (const auto& open : representative_qc_opens(m.codomain, image))
      if (!is_quasi_compact(m.domain, preimage(m, open))) return false;
  }
  return true;
}

}  // namespace tenspec::spectral

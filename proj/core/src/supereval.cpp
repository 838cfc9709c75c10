#include "tenspec/supereval.hpp"

#include <algorithm>

#include "tenspec/linalg.hpp"
#include "tenspec/parallel.hpp"

namespace tenspec::supereval {

using wbcat::Letter;
using wbcat::WBDiagram;
using wbcat::WBMorphism;
using wbcat::Word;

SuperTensor::SuperTensor(Word source, Word target, unsigned p, unsigned q)
    : src_(std::move(source)), dst_(std::move(target)), p_(p), q_(q) {}

void SuperTensor::add(uint64_t row, uint64_t col, const Rational& v) {
  if (v.is_zero()) return;
  auto key = std::make_pair(row, col);
  auto it = e_.find(key);
  if (it == e_.end()) {
    e_.emplace(key, v);
  } else {
    it->second += v;
    if (it->second.is_zero()) e_.erase(it);
  }
}

Rational SuperTensor::at(uint64_t row, uint64_t col) const {
  auto it = e_.find({row, col});
  return it == e_.end() ? Rational(0) : it->second;
}

SuperTensor SuperTensor::compose(const SuperTensor& inner) const {
  if (inner.dst_ != src_ || inner.p_ != p_ || inner.q_ != q_)
    throw std::invalid_argument("SuperTensor: shape mismatch in compose");
  SuperTensor out(inner.src_, dst_, p_, q_);
  // group this's entries by column for the middle sum
  std::map<uint64_t, std::vector<std::pair<uint64_t, Rational>>> by_col;
  for (const auto& [rc, v] : e_) by_col[rc.second].emplace_back(rc.first, v);
  for (const auto& [rc, v] : inner.e_) {
    auto it = by_col.find(rc.first);
    if (it == by_col.end()) continue;
    for (const auto& [row, w] : it->second) out.add(row, rc.second, w * v);
  }
  return out;
}

SuperTensor SuperTensor::tensor_with(const SuperTensor& other) const {
  if (other.p_ != p_ || other.q_ != q_)
    throw std::invalid_argument("SuperTensor: dimension mismatch in tensor");
  const unsigned N = dim();
  uint64_t src_shift = 1, dst_shift = 1;
  for (size_t i = 0; i < other.src_.size(); ++i) src_shift *= N;
  for (size_t i = 0; i < other.dst_.size(); ++i) dst_shift *= N;
  SuperTensor out(src_.tensor(other.src_), dst_.tensor(other.dst_), p_, q_);
  // diagram images are even maps, so the Kronecker product carries no sign
  for (const auto& [rc1, v1] : e_)
    for (const auto& [rc2, v2] : other.e_)
      out.add(rc1.first * dst_shift + rc2.first, rc1.second * src_shift + rc2.second, v1 * v2);
  return out;
}

Rational SuperTensor::supertrace() const {
  if (src_ != dst_) throw std::invalid_argument("SuperTensor: supertrace of non-endomorphism");
  const unsigned N = dim();
  Rational acc(0);
  for (const auto& [rc, v] : e_) {
    if (rc.first != rc.second) continue;
    // parity of the multi-index
    uint64_t idx = rc.first;
    unsigned parity = 0;
    for (size_t i = 0; i < src_.size(); ++i) {
      if (idx % N >= p_) parity ^= 1;
      idx /= N;
    }
    acc += parity ? -v : v;
  }
  return acc;
}

namespace {

struct Layer {
  enum class Kind { Cross, Cap, Cup } kind;
  uint16_t pos;
  bool up_first = false;  // for Cap/Cup: left letter is Up
};

// Decompose a diagram into elementary layers, bottom to top: first remove
// source arcs (moving endpoints adjacent with crossings), then create target
// arcs at the right end, then sort strands into target order.
std::vector<Layer> decompose(const WBDiagram& d, const Word& w, const Word& w2) {
  const size_t m = w.size();
  std::vector<Layer> layers;

  std::vector<uint16_t> partner(m + w2.size());
  for (const auto& [a, b] : d.edges()) {
    partner[a] = b;
    partner[b] = a;
  }

  // boundary holds source node ids
  std::vector<uint16_t> b(m);
  for (size_t i = 0; i < m; ++i) b[i] = static_cast<uint16_t>(i);

  auto boundary_pos = [&](uint16_t node) {
    return std::find(b.begin(), b.end(), node) - b.begin();
  };

  for (;;) {
    // leftmost source cap
    size_t pa = b.size();
    for (size_t i = 0; i < b.size() && pa == b.size(); ++i)
      if (partner[b[i]] < m) pa = i;
    if (pa == b.size()) break;
    const size_t pb = boundary_pos(partner[b[pa]]);
    for (size_t q = pb; q-- > pa + 1;) {
      layers.push_back({Layer::Kind::Cross, static_cast<uint16_t>(q), false});
      std::swap(b[q], b[q + 1]);
    }
    layers.push_back({Layer::Kind::Cap, static_cast<uint16_t>(pa), w.at(b[pa]) == Letter::Up});
    b.erase(b.begin() + pa, b.begin() + pa + 2);
  }

  // relabel through strands by their target position
  std::vector<uint16_t> t(b.size());
  for (size_t i = 0; i < b.size(); ++i) t[i] = static_cast<uint16_t>(partner[b[i]] - m);

  // target arcs, created at the right end in ascending order of left endpoint
  std::vector<std::pair<uint16_t, uint16_t>> cups;
  for (const auto& [x, y] : d.edges())
    if (x >= m && y >= m) cups.emplace_back(static_cast<uint16_t>(x - m), static_cast<uint16_t>(y - m));
  std::sort(cups.begin(), cups.end());
  for (const auto& [j1, j2] : cups) {
    layers.push_back({Layer::Kind::Cup, static_cast<uint16_t>(t.size()), w2.at(j1) == Letter::Up});
    t.push_back(j1);
    t.push_back(j2);
  }

  // selection sort with adjacent crossings
  for (size_t i = 0; i < t.size(); ++i) {
    size_t p = i;
    while (t[p] != i) ++p;
    for (size_t q = p; q-- > i;) {
      layers.push_back({Layer::Kind::Cross, static_cast<uint16_t>(q), false});
      std::swap(t[q], t[q + 1]);
    }
  }
  return layers;
}

uint64_t pow_u64(uint64_t base, size_t e) {
  uint64_t r = 1;
  while (e--) r *= base;
  return r;
}

void check_budget(unsigned N, size_t total_len) {
  if (N < 2) return;
  uint64_t size = 1;
  for (size_t i = 0; i < total_len; ++i) {
    size *= N;
    if (size > kEvalBudget) throw BudgetError("supereval: dense multi-index budget exceeded");
  }
}

// sparse vector over boundary multi-indices
using SVec = std::map<uint64_t, Rational>;

int parity_sign(unsigned digit, unsigned p) { return digit >= p ? -1 : 1; }

SVec apply_layer(const SVec& v, const Layer& layer, size_t len_before, unsigned p, unsigned N) {
  SVec out;
  std::vector<unsigned> digits(len_before);
  for (const auto& [idx, val] : v) {
    uint64_t x = idx;
    for (size_t i = len_before; i-- > 0;) {
      digits[i] = static_cast<unsigned>(x % N);
      x /= N;
    }
    switch (layer.kind) {
      case Layer::Kind::Cross: {
        const unsigned a = digits[layer.pos], bdig = digits[layer.pos + 1];
        std::vector<unsigned> nd = digits;
        std::swap(nd[layer.pos], nd[layer.pos + 1]);
        uint64_t nidx = 0;
        for (unsigned dgt : nd) nidx = nidx * N + dgt;
        const bool both_odd = a >= p && bdig >= p;
        auto [it, inserted] = out.try_emplace(nidx, both_odd ? -val : val);
        if (!inserted) it->second += both_odd ? -val : val;
        break;
      }
      case Layer::Kind::Cap: {
        const unsigned a = digits[layer.pos], bdig = digits[layer.pos + 1];
        if (a != bdig) break;
        uint64_t nidx = 0;
        for (size_t i = 0; i < len_before; ++i) {
          if (i == layer.pos || i == static_cast<size_t>(layer.pos) + 1) continue;
          nidx = nidx * N + digits[i];
        }
        const Rational add = layer.up_first && parity_sign(a, p) < 0 ? -val : val;
        auto [it, inserted] = out.try_emplace(nidx, add);
        if (!inserted) it->second += add;
        break;
      }
      case Layer::Kind::Cup: {
        for (unsigned a = 0; a < N; ++a) {
          const uint64_t nidx = (idx * N + a) * N + a;
          const Rational add = !layer.up_first && parity_sign(a, p) < 0 ? -val : val;
          auto [it, inserted] = out.try_emplace(nidx, add);
          if (!inserted) it->second += add;
        }
        break;
      }
    }
  }
  for (auto it = out.begin(); it != out.end();)
    it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

}  // namespace

SuperTensor eval_diagram(const WBDiagram& d, const Word& w, const Word& w2, unsigned p,
                         unsigned q) {
  if (!diagram_valid(d, w, w2)) throw std::invalid_argument("eval_diagram: invalid diagram");
  const unsigned N = p + q;
  check_budget(N, w.size() + w2.size());
  SuperTensor out(w, w2, p, q);
  if (N == 0) {
    if (w.empty() && w2.empty()) out.add(0, 0, Rational(1));
    return out;
  }
  const auto layers = decompose(d, w, w2);
  const uint64_t cols = pow_u64(N, w.size());
  auto eval_col = [&](size_t col) {
    SVec v{{static_cast<uint64_t>(col), Rational(1)}};
    size_t len = w.size();
    for (const auto& layer : layers) {
      v = apply_layer(v, layer, len, p, N);
      if (layer.kind == Layer::Kind::Cap)
        len -= 2;
      else if (layer.kind == Layer::Kind::Cup)
        len += 2;
      if (v.empty()) break;
    }
    return v;
  };
  const auto results = parallel::map<SVec>(cols, eval_col);
  for (uint64_t col = 0; col < cols; ++col)
    for (const auto& [row, val] : results[col]) out.add(row, col, val);
  return out;
}

SuperTensor eval_morphism(const WBMorphism& f, unsigned p, unsigned q) {
  const Rational loop_value(static_cast<long>(p) - static_cast<long>(q));
  if (!f.param().is_generic() && f.param().alpha() != loop_value)
    throw std::invalid_argument("eval_morphism: session parameter does not equal p - q");
  SuperTensor out(f.source(), f.target(), p, q);
  for (const auto& [d, c] : f.terms()) {
    const Rational coeff = c.eval(loop_value);
    if (coeff.is_zero()) continue;
    const SuperTensor img = eval_diagram(d, f.source(), f.target(), p, q);
    for (const auto& [rc, v] : img.entries()) out.add(rc.first, rc.second, v * coeff);
  }
  return out;
}

std::vector<std::vector<Rational>> kernel_basis(const Word& w, const Word& w2, unsigned p,
                                                unsigned q) {
  const auto diagrams = enumerate_diagrams(w, w2);
  const size_t k = diagrams.size();
  if (k == 0) return {};
  const unsigned N = p + q;
  check_budget(N, w.size() + w2.size());
  const auto images = parallel::map<SuperTensor>(k, [&](size_t i) {
    return eval_diagram(diagrams[i], w, w2, p, q);
  });
  std::map<std::pair<uint64_t, uint64_t>, linalg::Vec> equations;
  for (size_t i = 0; i < k; ++i)
    for (const auto& [rc, v] : images[i].entries()) {
      auto it = equations.find(rc);
      if (it == equations.end()) it = equations.emplace(rc, linalg::Vec(k, Rational(0))).first;
      it->second[i] = v;
    }
  linalg::Mat rows;
  rows.reserve(equations.size());
  for (auto& [rc, row] : equations) rows.push_back(std::move(row));
  return linalg::nullspace(rows, k);
}

SuperDimension super_dimension(const WBMorphism& e, unsigned p, unsigned q) {
  const Rational loop_value(static_cast<long>(p) - static_cast<long>(q));
  const WBMorphism es = e.param().is_generic() ? e.specialize(loop_value) : e;
  if (!(compose(es, es) == es)) throw std::invalid_argument("super_dimension: not idempotent");
  const SuperTensor E = eval_morphism(es, p, q);
  const unsigned N = p + q;
  const size_t L = e.source().size();
  const uint64_t dim = N == 0 ? (L == 0 ? 1 : 0) : pow_u64(N, L);
  auto parity = [&](uint64_t idx) {
    unsigned par = 0;
    for (size_t i = 0; i < L; ++i) {
      if (idx % N >= p) par ^= 1;
      idx /= N;
    }
    return par;
  };
  std::vector<uint64_t> even_idx, odd_idx;
  for (uint64_t i = 0; i < dim; ++i) (N && parity(i) ? odd_idx : even_idx).push_back(i);
  auto block_rank = [&](const std::vector<uint64_t>& idx) {
    if (idx.empty()) return size_t{0};
    std::map<uint64_t, size_t> pos;
    for (size_t i = 0; i < idx.size(); ++i) pos[idx[i]] = i;
    linalg::Mat m(idx.size(), linalg::Vec(idx.size(), Rational(0)));
    for (const auto& [rc, v] : E.entries()) {
      auto r = pos.find(rc.first), c = pos.find(rc.second);
      if (r != pos.end() && c != pos.end()) m[r->second][c->second] = v;
    }
    return linalg::rank(std::move(m));
  };
  SuperDimension out;
  out.even = static_cast<unsigned>(block_rank(even_idx));
  out.odd = static_cast<unsigned>(block_rank(odd_idx));
  const Rational chi = wbcat::trace(es).eval(loop_value);
  if (Rational(static_cast<long>(out.even) - static_cast<long>(out.odd)) != chi)
    throw std::logic_error("super_dimension: even - odd does not match the trace");
  return out;
}

}  // namespace tenspec::supereval

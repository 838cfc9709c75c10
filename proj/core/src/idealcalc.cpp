#include "tenspec/idealcalc.hpp"

#include <algorithm>
#include <random>

#include "tenspec/parallel.hpp"

namespace tenspec::idealcalc {

using wbcat::WBDiagram;

namespace {

bool word_order(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

}  // namespace

ProbeWindow::ProbeWindow(std::vector<Word> objects) {
  objs_ = std::move(objects);
  objs_.push_back(Word());  // the unit
  const size_t given = objs_.size();
  for (size_t i = 0; i < given; ++i) objs_.push_back(objs_[i].dual());
  std::sort(objs_.begin(), objs_.end(), word_order);
  objs_.erase(std::unique(objs_.begin(), objs_.end()), objs_.end());
}

ProbeWindow ProbeWindow::words_up_to(size_t max_len) {
  std::vector<Word> words{Word()};
  for (size_t len = 1; len <= max_len; ++len) {
    const size_t count = size_t{1} << len;
    for (size_t mask = 0; mask < count; ++mask) {
      std::vector<wbcat::Letter> letters;
      for (size_t i = 0; i < len; ++i)
        letters.push_back(mask & (size_t{1} << i) ? wbcat::Letter::Down : wbcat::Letter::Up);
      words.emplace_back(std::move(letters));
    }
  }
  return ProbeWindow(std::move(words));
}

bool ProbeWindow::contains(const Word& w) const {
  return std::binary_search(objs_.begin(), objs_.end(), w, word_order);
}

size_t ProbeWindow::max_len() const {
  size_t m = 0;
  for (const auto& w : objs_) m = std::max(m, w.size());
  return m;
}

IdealSpan::IdealSpan(ProbeWindow window, Parameter param)
    : window_(std::move(window)), param_(std::move(param)) {
  for (const auto& a : window_.objects())
    for (const auto& b : window_.objects()) {
      if (a.balance() != b.balance()) continue;
      spans_.emplace(PairKey{a, b}, linalg::SpanBasis(enumerate_diagrams(a, b).size()));
    }
}

linalg::SpanBasis& IdealSpan::span(const PairKey& key) {
  auto it = spans_.find(key);
  if (it == spans_.end()) throw std::invalid_argument("IdealSpan: pair outside the window");
  return it->second;
}

const linalg::SpanBasis& IdealSpan::span(const PairKey& key) const {
  auto it = spans_.find(key);
  if (it == spans_.end()) throw std::invalid_argument("IdealSpan: pair outside the window");
  return it->second;
}

bool IdealSpan::pair_in_window(const PairKey& key) const {
  return window_.contains(key.src) && window_.contains(key.dst);
}

bool IdealSpan::member(const WBMorphism& f) const {
  if (!pair_in_window({f.source(), f.target()}))
    throw std::invalid_argument("IdealSpan: pair outside the window");
  if (f.is_zero()) return true;
  if (f.source().balance() != f.target().balance()) return f.is_zero();
  return span({f.source(), f.target()}).contains(f.coefficient_vector());
}

bool IdealSpan::insert(const WBMorphism& f) {
  if (f.is_zero()) return false;
  return span({f.source(), f.target()}).insert(f.coefficient_vector());
}

bool IdealSpan::includes(const IdealSpan& other) const {
  for (const auto& [key, basis] : other.spans_) {
    auto it = spans_.find(key);
    if (it == spans_.end()) {
      if (basis.rank() > 0) return false;
      continue;
    }
    if (!it->second.contains_all(basis)) return false;
  }
  return true;
}

size_t IdealSpan::total_rank() const {
  size_t r = 0;
  for (const auto& [key, basis] : spans_) r += basis.rank();
  return r;
}

namespace {

// Adds the full ideal span of one generator to `out`, pair by pair, through
// the name factorization.
void fold_generator(const WBMorphism& gen, IdealSpan& out) {
  if (gen.is_zero()) return;
  if (gen.source().balance() != gen.target().balance())
    throw std::invalid_argument("generate_ideal: generator between unbalanced words is zero");
  const WBMorphism name = wbcat::adjoint_name(gen);  // 1 -> dual(A) . B, balance 0
  for (const auto& x : out.window().objects()) {
    const WBMorphism lift = wbcat::tensor(WBMorphism::identity(x, gen.param()), name);
    for (const auto& y : out.window().objects()) {
      if (x.balance() != y.balance()) continue;
      const auto& target_span = out.span({x, y});
      if (target_span.rank() == target_span.ambient_dim()) continue;  // already full
      const auto mediators = enumerate_diagrams(lift.target(), y);
      for (const auto& phi : mediators) {
        const WBMorphism piece = wbcat::compose(
            WBMorphism::single(lift.target(), y, gen.param(), phi, gen.param().one()), lift);
        out.insert(piece);
        const auto& sp = out.span({x, y});
        if (sp.rank() == sp.ambient_dim()) break;
      }
    }
  }
}

}  // namespace

IdealSpan generate_ideal(const std::vector<WBMorphism>& gens, const ProbeWindow& window,
                         std::optional<Parameter> param) {
  if (!param) {
    if (gens.empty())
      throw std::invalid_argument("generate_ideal: empty generators need an explicit parameter");
    param = gens.front().param();
  }
  for (const auto& g : gens)
    if (!(g.param() == *param))
      throw std::invalid_argument("generate_ideal: mixed session parameters");
  IdealSpan out(window, *param);
  for (const auto& g : gens) fold_generator(g, out);
  return out;
}

bool ideal_member(const WBMorphism& f, const IdealSpan& ideal) { return ideal.member(f); }

bool verify_closure(const IdealSpan& ideal, size_t max_pairs) {
  const auto& window = ideal.window();
  size_t checked = 0;
  for (const auto& [key, basis] : ideal.spans()) {
    if (basis.rank() == 0) continue;
    if (checked++ >= max_pairs) break;
    for (const auto& row : basis.rows()) {
      const WBMorphism f =
          WBMorphism::from_coefficients(key.src, key.dst, ideal.param(), row);
      for (const auto& c : window.objects()) {
        const WBMorphism fc = wbcat::tensor(f, WBMorphism::identity(c, ideal.param()));
        for (const auto& x : window.objects()) {
          if (x.balance() != fc.source().balance()) continue;
          for (const auto& y : window.objects()) {
            if (y.balance() != x.balance()) continue;
            for (const auto& u : enumerate_diagrams(x, fc.source())) {
              const WBMorphism fu = wbcat::compose(
                  fc, WBMorphism::single(x, fc.source(), ideal.param(), u, ideal.param().one()));
              for (const auto& v : enumerate_diagrams(fc.target(), y)) {
                const WBMorphism vfu = wbcat::compose(
                    WBMorphism::single(fc.target(), y, ideal.param(), v, ideal.param().one()),
                    fu);
                if (!ideal.member(vfu)) return false;
              }
            }
          }
        }
      }
    }
  }
  return true;
}

std::vector<std::vector<Poly>> gram_matrix_generic(const Word& src, const Word& dst) {
  const Parameter t = Parameter::generic();
  const auto forward = enumerate_diagrams(src, dst);
  const auto backward = enumerate_diagrams(dst, src);
  std::vector<std::vector<Poly>> m(backward.size(), std::vector<Poly>(forward.size()));
  for (size_t j = 0; j < backward.size(); ++j) {
    const WBMorphism e = WBMorphism::single(dst, src, t, backward[j], t.one());
    for (size_t i = 0; i < forward.size(); ++i) {
      const WBMorphism d = WBMorphism::single(src, dst, t, forward[i], t.one());
      m[j][i] = wbcat::trace(wbcat::compose(e, d)).poly();
    }
  }
  return m;
}

linalg::Mat gram_matrix_at(const Word& src, const Word& dst, const Rational& alpha) {
  const Parameter t = Parameter::at(alpha);
  const auto forward = enumerate_diagrams(src, dst);
  const auto backward = enumerate_diagrams(dst, src);
  linalg::Mat m(backward.size(), linalg::Vec(forward.size(), Rational(0)));
  for (size_t j = 0; j < backward.size(); ++j) {
    const WBMorphism e = WBMorphism::single(dst, src, t, backward[j], t.one());
    for (size_t i = 0; i < forward.size(); ++i) {
      const WBMorphism d = WBMorphism::single(src, dst, t, forward[i], t.one());
      m[j][i] = wbcat::trace(wbcat::compose(e, d)).rat();
    }
  }
  return m;
}

GramAnalysis gram_analysis(const Word& w) {
  GramAnalysis out;
  const auto m = gram_matrix_generic(w, w);
  out.dim = m.size();
  out.det = poly_matrix_det(m);
  // square matrix: a nonzero determinant settles the kernel over Q(t)
  out.nullity = out.det.is_zero() ? out.dim - poly_matrix_rank(m) : 0;
  if (!out.det.is_zero()) out.roots = integer_roots(out.det);
  return out;
}

IdealSpan tr_star(const ProbeWindow& window, const Rational& alpha) {
  IdealSpan out(window, Parameter::at(alpha));
  std::vector<PairKey> keys;
  for (const auto& [key, basis] : out.spans()) keys.push_back(key);
  const auto kernels = parallel::map<linalg::Mat>(keys.size(), [&](size_t i) {
    const auto m = gram_matrix_at(keys[i].src, keys[i].dst, alpha);
    const size_t dim = enumerate_diagrams(keys[i].src, keys[i].dst).size();
    return linalg::nullspace(m, dim);
  });
  for (size_t i = 0; i < keys.size(); ++i)
    for (const auto& vec : kernels[i]) out.span(keys[i]).insert(vec);
  return out;
}

NilpotenceVerdict nilpotent_member(const WBMorphism& f, const IdealSpan& ideal,
                                   unsigned max_power) {
  WBMorphism power = f;
  for (unsigned n = 1; n <= max_power; ++n) {
    if (!ideal.pair_in_window({power.source(), power.target()}))
      throw BudgetError("nilpotent_member: tensor power leaves the window");
    if (ideal.member(power)) return {true, n};
    if (n < max_power) power = wbcat::tensor(power, f);
  }
  return {false, 0};
}

QuasiInvertibleVerdict quasi_invertible(const WBMorphism& f, const ProbeWindow& window) {
  QuasiInvertibleVerdict out;
  if (f.is_zero()) {
    out.kind = QuasiInvertibleVerdict::Kind::No;  // 0 composed anywhere stays 0
    return out;
  }
  const Parameter& param = f.param();
  for (const auto& c : window.objects()) {
    const Word ac = f.source().tensor(c);
    const Word bc = f.target().tensor(c);
    if (ac.balance() != 0) continue;  // no morphisms from the unit otherwise
    const WBMorphism fc = wbcat::tensor(f, WBMorphism::identity(c, param));
    for (const auto& hd : enumerate_diagrams(Word(), ac)) {
      const WBMorphism h = WBMorphism::single(Word(), ac, param, hd, param.one());
      const WBMorphism fh = wbcat::compose(fc, h);
      for (const auto& gd : enumerate_diagrams(bc, Word())) {
        const WBMorphism g = WBMorphism::single(bc, Word(), param, gd, param.one());
        const WBMorphism scalar = wbcat::compose(g, fh);
        Scalar beta = param.zero();
        for (const auto& [d, coeff] : scalar.terms()) beta += coeff;
        if (beta.is_zero()) continue;
        Rational beta_inv;
        if (param.is_generic()) {
          if (!beta.poly().is_constant()) continue;  // t is not invertible generically
          beta_inv = beta.poly().coeff(0).inverse();
        } else {
          beta_inv = beta.rat().inverse();
        }
        out.kind = QuasiInvertibleVerdict::Kind::Yes;
        out.witness_object = c;
        out.g = g;
        out.h = h.scale(beta_inv);
        return out;
      }
    }
  }
  out.kind = QuasiInvertibleVerdict::Kind::Unknown;
  return out;
}

IdealSpan functor_kernel_ideal(unsigned p, unsigned q, const ProbeWindow& window) {
  const Rational alpha(static_cast<long>(p) - static_cast<long>(q));
  IdealSpan out(window, Parameter::at(alpha));
  std::vector<PairKey> keys;
  for (const auto& [key, basis] : out.spans()) keys.push_back(key);
  using Basis = std::vector<std::vector<Rational>>;
  const auto kernels = parallel::map<Basis>(keys.size(), [&](size_t i) {
    return supereval::kernel_basis(keys[i].src, keys[i].dst, p, q);
  });
  for (size_t i = 0; i < keys.size(); ++i)
    for (const auto& vec : kernels[i]) out.span(keys[i]).insert(vec);
  return out;
}

bool sample_integrality(const IdealSpan& ideal, unsigned seed, unsigned trials) {
  std::mt19937 rng(seed);
  std::vector<PairKey> keys;
  for (const auto& [key, basis] : ideal.spans()) keys.push_back(key);
  if (keys.empty()) return true;
  std::uniform_int_distribution<size_t> pick(0, keys.size() - 1);
  std::uniform_int_distribution<int> coeff(-2, 2);
  unsigned done = 0;
  for (unsigned attempt = 0; attempt < trials * 20 && done < trials; ++attempt) {
    const PairKey& p1 = keys[pick(rng)];
    const PairKey& p2 = keys[pick(rng)];
    const PairKey prod{p1.src.tensor(p2.src), p1.dst.tensor(p2.dst)};
    if (!ideal.pair_in_window(prod)) continue;
    auto random_outside = [&](const PairKey& key) -> std::optional<WBMorphism> {
      const auto& sp = ideal.span(key);
      if (sp.ambient_dim() == 0 || sp.rank() == sp.ambient_dim()) return std::nullopt;
      for (int tries = 0; tries < 8; ++tries) {
        linalg::Vec v(sp.ambient_dim());
        for (auto& x : v) x = Rational(coeff(rng));
        if (!sp.contains(v))
          return WBMorphism::from_coefficients(key.src, key.dst, ideal.param(), v);
      }
      return std::nullopt;
    };
    const auto f = random_outside(p1);
    const auto g = random_outside(p2);
    if (!f || !g) continue;
    ++done;
    if (ideal.member(wbcat::tensor(*f, *g))) return false;  // integrality violated
  }
  return true;
}

bool tag_member(const WBMorphism& f, const TensorPrimeTag& tag) {
  if (const auto* tr = std::get_if<TraceRadicalTag>(&tag)) {
    const WBMorphism fs = f.param().is_generic() ? f.specialize(tr->alpha) : f;
    if (fs.param().alpha() != tr->alpha)
      throw std::invalid_argument("tag_member: parameter mismatch");
    for (const auto& e : enumerate_diagrams(fs.target(), fs.source())) {
      const WBMorphism g =
          WBMorphism::single(fs.target(), fs.source(), fs.param(), e, fs.param().one());
      if (!wbcat::trace(wbcat::compose(g, fs)).rat().is_zero()) return false;
    }
    return true;
  }
  const auto& fk = std::get<FunctorKernelTag>(tag);
  const Rational alpha(static_cast<long>(fk.p) - static_cast<long>(fk.q));
  const WBMorphism fs = f.param().is_generic() ? f.specialize(alpha) : f;
  return supereval::eval_morphism(fs, fk.p, fk.q).is_zero();
}

ChainSpectrum chain_spectrum(int n, unsigned max_r, const ProbeWindow& window) {
  ChainSpectrum out;
  out.n = n;
  out.max_r = max_r;
  const Rational alpha(static_cast<long>(n));
  for (unsigned r = 0; r <= max_r; ++r) {
    const unsigned p = n >= 0 ? static_cast<unsigned>(n) + r : r;
    const unsigned q = n >= 0 ? r : r + static_cast<unsigned>(-n);
    out.pq.emplace_back(p, q);
    if (n == 0 && r == 0) {
      out.ideals.push_back(tr_star(window, alpha));  // P(0|0) is the trace radical by convention
    } else {
      out.ideals.push_back(functor_kernel_ideal(p, q, window));
    }
  }
  const IdealSpan radical = n == 0 ? out.ideals[0] : tr_star(window, alpha);
  out.m0_is_trace_radical = out.ideals[0] == radical;
  if (!out.m0_is_trace_radical)
    throw std::logic_error("chain_spectrum: kernel at the base of the chain differs from the trace radical");
  for (unsigned r = 0; r + 1 <= max_r; ++r) {
    if (!out.ideals[r].includes(out.ideals[r + 1]))
      throw std::logic_error("chain_spectrum: chain inclusion failed");
    // strictness witness: a basis vector of M(r) outside M(r+1)
    for (const auto& [key, basis] : out.ideals[r].spans()) {
      bool found = false;
      for (const auto& row : basis.rows()) {
        if (!out.ideals[r + 1].span(key).contains(row)) {
          out.witnesses.push_back({r, key, row});
          found = true;
          break;
        }
      }
      if (found) break;
    }
  }
  // the ω+1 chain with its two structure maps
  out.space = spectral::SpectralSpaceDesc::omega(spectral::Topology::Zariski);
  spectral::FinitePoset point({"SpecQ"}, {});
  auto point_space = spectral::SpectralSpaceDesc::poset(point);
  out.pi = spectral::SpectralMap{
      out.space, point_space,
      spectral::OmegaRule{{}, spectral::Point(size_t{0}), spectral::Point(size_t{0})}};
  out.sigma_tr = spectral::SpectralMap{
      point_space, out.space,
      spectral::FiniteRule{{spectral::Point(spectral::OmegaPoint::nat(0))}}};
  out.maps_spectral = spectral::check_spectral_map(out.pi) && spectral::check_spectral_map(out.sigma_tr);
  const spectral::Point back = out.pi.apply(out.sigma_tr.apply(spectral::Point(size_t{0})));
  out.pi_sigma_identity = std::get<size_t>(back) == 0;
  if (!out.maps_spectral || !out.pi_sigma_identity)
    throw std::logic_error("chain_spectrum: structure map verification failed");
  return out;
}

IdealSpan tensor_square_span(const IdealSpan& ideal, const IdealSpan* early_stop_target) {
  IdealSpan out(ideal.window(), ideal.param());
  struct Gen {
    size_t cost;
    PairKey p1, p2;
    size_t i, j;
  };
  std::vector<Gen> gens;
  for (const auto& [k1, b1] : ideal.spans())
    for (const auto& [k2, b2] : ideal.spans()) {
      if (b1.rank() == 0 || b2.rank() == 0) continue;
      const size_t cost = k1.src.size() + k1.dst.size() + k2.src.size() + k2.dst.size();
      for (size_t i = 0; i < b1.rank(); ++i)
        for (size_t j = 0; j < b2.rank(); ++j) gens.push_back({cost, k1, k2, i, j});
    }
  std::stable_sort(gens.begin(), gens.end(),
                   [](const Gen& a, const Gen& b) { return a.cost < b.cost; });
  for (const auto& gen : gens) {
    const WBMorphism f = WBMorphism::from_coefficients(
        gen.p1.src, gen.p1.dst, ideal.param(), ideal.span(gen.p1).rows()[gen.i]);
    const WBMorphism g = WBMorphism::from_coefficients(
        gen.p2.src, gen.p2.dst, ideal.param(), ideal.span(gen.p2).rows()[gen.j]);
    fold_generator(wbcat::tensor(f, g), out);
    if (early_stop_target && out.includes(*early_stop_target)) break;
  }
  return out;
}

bool schur_vanishes(const symgroup::Partition& lambda, const TensorPrimeTag& tag,
                    const Rational& alpha) {
  const auto c = symgroup::young_symmetrizer(lambda);
  const WBMorphism m = wbcat::embed_group_alg(c, Parameter::at(alpha));
  return tag_member(m, tag);
}

bool schur_vanishes(const symgroup::Partition& lambda, const IdealSpan& ideal) {
  const auto c = symgroup::young_symmetrizer(lambda);
  const WBMorphism m = wbcat::embed_group_alg(c, ideal.param());
  return ideal.member(m);
}

Rational symmetrizer_unit_scalar(const symgroup::Partition& lambda) {
  const auto c_lambda = symgroup::young_symmetrizer(lambda);
  Rational acc(0);
  for (const auto& [sigma, c] : c_lambda.coeffs()) acc += c;
  return acc;
}

}  // namespace tenspec::idealcalc

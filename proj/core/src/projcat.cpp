#include "tenspec/projcat.hpp"

#include <numeric>
#include <random>
#include <stdexcept>

namespace tenspec::projcat {

using boolflat::field_add;
using boolflat::field_inv;
using boolflat::field_mul;
using boolflat::field_neg;
using boolflat::field_normalize;

FMat::FMat(FieldDesc field, size_t rows, size_t cols)
    : f_(field), rows_(rows), cols_(cols), a_(rows * cols, Rational(0)) {}

FMat FMat::identity(FieldDesc field, size_t n) {
  FMat m(field, n, n);
  for (size_t i = 0; i < n; ++i) m.set(i, i, Rational(1));
  return m;
}

void FMat::set(size_t r, size_t c, const Rational& v) {
  a_[r * cols_ + c] = field_normalize(f_, v);
}

bool FMat::is_zero() const {
  for (const auto& v : a_)
    if (!v.is_zero()) return false;
  return true;
}

FMat FMat::add(const FMat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_ || !(f_ == o.f_))
    throw std::invalid_argument("FMat: shape mismatch in add");
  FMat out(f_, rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = field_add(f_, a_[i], o.a_[i]);
  return out;
}

FMat FMat::mul(const FMat& o) const {
  if (cols_ != o.rows_ || !(f_ == o.f_)) throw std::invalid_argument("FMat: shape mismatch in mul");
  FMat out(f_, rows_, o.cols_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t k = 0; k < cols_; ++k) {
      if (at(i, k).is_zero()) continue;
      for (size_t j = 0; j < o.cols_; ++j)
        out.a_[i * o.cols_ + j] =
            field_add(f_, out.a_[i * o.cols_ + j], field_mul(f_, at(i, k), o.at(k, j)));
    }
  return out;
}

FMat FMat::kron(const FMat& o) const {
  if (!(f_ == o.f_)) throw std::invalid_argument("FMat: field mismatch in kron");
  FMat out(f_, rows_ * o.rows_, cols_ * o.cols_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) {
      if (at(i, j).is_zero()) continue;
      for (size_t k = 0; k < o.rows_; ++k)
        for (size_t l = 0; l < o.cols_; ++l)
          out.set(i * o.rows_ + k, j * o.cols_ + l, field_mul(f_, at(i, j), o.at(k, l)));
    }
  return out;
}

size_t FMat::rank() const {
  std::vector<Rational> a = a_;
  size_t rank = 0;
  for (size_t col = 0; col < cols_ && rank < rows_; ++col) {
    size_t piv = rank;
    while (piv < rows_ && a[piv * cols_ + col].is_zero()) ++piv;
    if (piv == rows_) continue;
    std::swap_ranges(a.begin() + rank * cols_, a.begin() + (rank + 1) * cols_,
                     a.begin() + piv * cols_);
    const Rational inv = field_inv(f_, a[rank * cols_ + col]);
    for (size_t j = col; j < cols_; ++j)
      a[rank * cols_ + j] = field_mul(f_, a[rank * cols_ + j], inv);
    for (size_t i = 0; i < rows_; ++i) {
      if (i == rank || a[i * cols_ + col].is_zero()) continue;
      const Rational fct = a[i * cols_ + col];
      for (size_t j = col; j < cols_; ++j)
        a[i * cols_ + j] = field_add(f_, a[i * cols_ + j],
                                     field_neg(f_, field_mul(f_, fct, a[rank * cols_ + j])));
    }
    ++rank;
  }
  return rank;
}

std::optional<FMat> FMat::inverse() const {
  if (rows_ != cols_) throw std::invalid_argument("FMat: inverse of non-square matrix");
  const size_t n = rows_;
  FMat aug(f_, n, 2 * n);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) aug.set(i, j, at(i, j));
    aug.set(i, n + i, Rational(1));
  }
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && aug.at(piv, col).is_zero()) ++piv;
    if (piv == n) return std::nullopt;
    if (piv != col)
      for (size_t j = 0; j < 2 * n; ++j) {
        Rational tmp = aug.at(col, j);
        aug.set(col, j, aug.at(piv, j));
        aug.set(piv, j, tmp);
      }
    const Rational inv = field_inv(f_, aug.at(col, col));
    for (size_t j = 0; j < 2 * n; ++j) aug.set(col, j, field_mul(f_, aug.at(col, j), inv));
    for (size_t i = 0; i < n; ++i) {
      if (i == col || aug.at(i, col).is_zero()) continue;
      const Rational fct = aug.at(i, col);
      for (size_t j = 0; j < 2 * n; ++j)
        aug.set(i, j, field_add(f_, aug.at(i, j), field_neg(f_, field_mul(f_, fct, aug.at(col, j)))));
    }
  }
  FMat out(f_, n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) out.set(i, j, aug.at(i, n + j));
  return out;
}

unsigned DimVector::total() const { return std::accumulate(dims.begin(), dims.end(), 0u); }

std::string DimVector::str() const {
  std::string out;
  for (size_t i = 0; i < dims.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(dims[i]);
  }
  return out;
}

DimVector DimVector::parse(const std::string& s) {
  DimVector out;
  size_t pos = 0;
  while (pos < s.size()) {
    size_t comma = s.find(',', pos);
    std::string tok = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    pos = comma == std::string::npos ? s.size() : comma + 1;
    if (!tok.empty()) out.dims.push_back(std::stoul(tok));
  }
  return out;
}

DimVector tensor(const DimVector& a, const DimVector& b) {
  if (a.dims.size() != b.dims.size()) throw std::invalid_argument("DimVector: length mismatch");
  DimVector out;
  for (size_t i = 0; i < a.dims.size(); ++i) out.dims.push_back(a.dims[i] * b.dims[i]);
  return out;
}

DimVector direct_sum(const DimVector& a, const DimVector& b) {
  if (a.dims.size() != b.dims.size()) throw std::invalid_argument("DimVector: length mismatch");
  DimVector out;
  for (size_t i = 0; i < a.dims.size(); ++i) out.dims.push_back(a.dims[i] + b.dims[i]);
  return out;
}

BlockMorphism::BlockMorphism(const ProductRing& ring, const DimVector& source,
                             const DimVector& target) {
  if (source.dims.size() != ring.size() || target.dims.size() != ring.size())
    throw std::invalid_argument("BlockMorphism: dim vector / ring mismatch");
  for (size_t i = 0; i < ring.size(); ++i)
    b_.emplace_back(ring.factor(i), target.dims[i], source.dims[i]);
}

BlockMorphism BlockMorphism::identity(const ProductRing& ring, const DimVector& a) {
  BlockMorphism f(ring, a, a);
  for (size_t i = 0; i < ring.size(); ++i) f.b_[i] = FMat::identity(ring.factor(i), a.dims[i]);
  return f;
}

bool BlockMorphism::is_zero() const {
  for (const auto& b : b_)
    if (!b.is_zero()) return false;
  return true;
}

BlockMorphism BlockMorphism::from_blocks(std::vector<FMat> blocks) {
  BlockMorphism out;
  out.b_ = std::move(blocks);
  return out;
}

BlockMorphism compose(const BlockMorphism& g, const BlockMorphism& f) {
  if (g.blocks().size() != f.blocks().size())
    throw std::invalid_argument("BlockMorphism: factor count mismatch");
  std::vector<FMat> blocks;
  for (size_t i = 0; i < f.blocks().size(); ++i) blocks.push_back(g.block(i).mul(f.block(i)));
  return BlockMorphism::from_blocks(std::move(blocks));
}

BlockMorphism tensor(const BlockMorphism& f, const BlockMorphism& g) {
  if (f.blocks().size() != g.blocks().size())
    throw std::invalid_argument("BlockMorphism: factor count mismatch");
  std::vector<FMat> blocks;
  for (size_t i = 0; i < f.blocks().size(); ++i) blocks.push_back(f.block(i).kron(g.block(i)));
  return BlockMorphism::from_blocks(std::move(blocks));
}

BlockMorphism add(const BlockMorphism& f, const BlockMorphism& g) {
  if (f.blocks().size() != g.blocks().size())
    throw std::invalid_argument("BlockMorphism: factor count mismatch");
  std::vector<FMat> blocks;
  for (size_t i = 0; i < f.blocks().size(); ++i) blocks.push_back(f.block(i).add(g.block(i)));
  return BlockMorphism::from_blocks(std::move(blocks));
}

BlockMorphism central(const ProductRing& ring, const DimVector& a, const boolflat::RingElem& z) {
  BlockMorphism f = BlockMorphism::identity(ring, a);
  for (size_t i = 0; i < ring.size(); ++i) {
    FMat scaled(ring.factor(i), a.dims[i], a.dims[i]);
    for (size_t r = 0; r < a.dims[i]; ++r) scaled.set(r, r, z[i]);
    f.block(i) = scaled;
  }
  return f;
}

SupportSet support(const BlockMorphism& f) {
  SupportSet s;
  for (size_t i = 0; i < f.blocks().size(); ++i)
    if (!f.block(i).is_zero()) s.indices.insert(i);
  return s;
}

SupportSet support(const DimVector& a) {
  SupportSet s;
  for (size_t i = 0; i < a.dims.size(); ++i)
    if (a.dims[i] > 0) s.indices.insert(i);
  return s;
}

BoolElem support_idempotent(const BlockMorphism& f) { return BoolElem(support(f).indices); }

std::string SupportSet::str() const { return BoolElem(indices).str(); }

bool SerreIdeal::contains(const DimVector& a) const {
  for (size_t i : support(a).indices)
    if (!objects_supported_in.indices.count(i)) return false;
  return true;
}

std::vector<SerreIdeal> enumerate_serre_ideals(const ProductRing& ring) {
  const size_t k = ring.size();
  if (k > 20) throw std::invalid_argument("enumerate_serre_ideals: too many factors");
  std::vector<SerreIdeal> out;
  for (const auto& e : boolflat::all_idempotents(k)) {
    SerreIdeal ideal;
    ideal.objects_supported_in.indices = e.support();
    ideal.centre_ideal = RingIdeal::from_subset(e.support());
    out.push_back(std::move(ideal));
  }
  return out;
}

QuotientResult quotient_map(const ProductRing& ring, const DimVector& source,
                            const DimVector& target, const BlockMorphism& f,
                            const RingIdeal& ideal) {
  std::vector<FieldDesc> kept_fields;
  std::vector<size_t> kept;
  for (size_t i = 0; i < ring.size(); ++i) {
    if (ideal.subset().count(i)) continue;
    kept.push_back(i);
    kept_fields.push_back(ring.factor(i));
  }
  if (kept.empty())
    throw std::invalid_argument("quotient_map: quotient by the unit ideal is the zero category");
  QuotientResult out{ProductRing(kept_fields), DimVector{}, DimVector{}, BlockMorphism{}, kept};
  std::vector<FMat> blocks;
  for (size_t i : kept) {
    out.source.dims.push_back(source.dims[i]);
    out.target.dims.push_back(target.dims[i]);
    blocks.push_back(f.block(i));
  }
  out.map = BlockMorphism::from_blocks(std::move(blocks));
  return out;
}

bool sigma_membership(const BlockMorphism& f, const RingIdeal& prime, size_t factor_count) {
  if (!prime.is_prime(factor_count))
    throw std::invalid_argument("sigma_membership: ideal is not prime");
  size_t surviving = factor_count;
  for (size_t i = 0; i < factor_count; ++i)
    if (!prime.subset().count(i)) surviving = i;
  return f.block(surviving).is_zero();
}

SplitWitness split_check(const ProductRing& ring, const DimVector& sub, const DimVector& whole,
                         const BlockMorphism& inclusion) {
  for (size_t i = 0; i < ring.size(); ++i)
    if (inclusion.block(i).rank() != sub.dims[i])
      throw std::invalid_argument("split_check: inclusion is not blockwise injective");
  DimVector coker;
  for (size_t i = 0; i < ring.size(); ++i) coker.dims.push_back(whole.dims[i] - sub.dims[i]);
  SplitWitness out;
  SupportSet inter;
  for (size_t i : support(sub).indices)
    if (support(coker).indices.count(i)) inter.indices.insert(i);
  if (!inter.indices.empty()) {
    out.overlap = inter;
    return out;
  }
  // disjoint supports: on each factor either the subobject vanishes (zero
  // retraction) or the inclusion block is square and invertible
  BlockMorphism r(ring, whole, sub);
  for (size_t i = 0; i < ring.size(); ++i) {
    if (sub.dims[i] == 0) continue;
    auto inv = inclusion.block(i).inverse();
    if (!inv) throw std::logic_error("split_check: square injective block must invert");
    r.block(i) = *inv;
  }
  out.retraction = r;
  return out;
}

ProjSpectrum spectrum(const ProductRing& ring) {
  const size_t k = ring.size();
  std::vector<std::string> names;
  std::vector<RingIdeal> primes;
  for (size_t i = 0; i < k; ++i) {
    std::set<size_t> subset;
    for (size_t j = 0; j < k; ++j)
      if (j != i) subset.insert(j);
    primes.push_back(RingIdeal::from_subset(std::move(subset)));
    names.push_back("M" + std::to_string(i + 1));
  }
  spectral::FinitePoset poset(names, {});
  auto desc = spectral::SpectralSpaceDesc::poset(poset);
  spectral::FiniteRule rule;
  for (size_t i = 0; i < k; ++i) rule.images.push_back(spectral::Point(i));
  ProjSpectrum out{poset, primes,
                   spectral::SpectralMap{desc, desc, rule},
                   spectral::SpectralMap{desc, desc, rule}};
  return out;
}

namespace {

// morphism with identity blocks exactly on the given support pattern
BlockMorphism pattern_morphism(const ProductRing& ring, const DimVector& dims, uint32_t mask) {
  BlockMorphism f(ring, dims, dims);
  for (size_t i = 0; i < ring.size(); ++i)
    if (mask & (1u << i)) f.block(i) = FMat::identity(ring.factor(i), dims.dims[i]);
  return f;
}

BlockMorphism random_morphism(const ProductRing& ring, const DimVector& src, const DimVector& dst,
                              std::mt19937& rng) {
  BlockMorphism f(ring, src, dst);
  std::uniform_int_distribution<int> entry(-2, 2);
  for (size_t i = 0; i < ring.size(); ++i)
    for (size_t r = 0; r < dst.dims[i]; ++r)
      for (size_t c = 0; c < src.dims[i]; ++c) f.block(i).set(r, c, Rational(entry(rng)));
  return f;
}

}  // namespace

ModelChecks run_model_checks(const ProductRing& ring, unsigned max_dim, unsigned seed) {
  ModelChecks out;
  const size_t k = ring.size();
  std::mt19937 rng(seed);
  std::uniform_int_distribution<unsigned> dim_pick(0, max_dim);

  const auto serre = enumerate_serre_ideals(ring);
  out.serre_count = serre.size();
  out.serre_count_ok = serre.size() == (size_t{1} << k);

  out.serre_round_trip = true;
  for (const auto& ideal : serre) {
    // the ideal's objects recover the centre ideal, and back
    std::set<size_t> touched;
    for (size_t i : ideal.objects_supported_in.indices) {
      DimVector probe;
      probe.dims.assign(k, 0);
      probe.dims[i] = 1;
      if (!ideal.contains(probe)) out.serre_round_trip = false;
      touched.insert(i);
    }
    if (RingIdeal::from_subset(touched) != ideal.centre_ideal) out.serre_round_trip = false;
    DimVector outside;
    outside.dims.assign(k, 1);
    if (ideal.objects_supported_in.indices.size() < k && ideal.contains(outside))
      out.serre_round_trip = false;
  }

  DimVector ones;
  ones.dims.assign(k, 1);

  // f ⊗ g = 0 iff disjoint supports: exhaustive over support patterns, then
  // random matrices at larger dims
  out.support_product_rule = true;
  out.support_composition = true;
  for (uint32_t m1 = 0; m1 < (1u << k); ++m1)
    for (uint32_t m2 = 0; m2 < (1u << k); ++m2) {
      const auto f = pattern_morphism(ring, ones, m1);
      const auto g = pattern_morphism(ring, ones, m2);
      const bool disjoint = (m1 & m2) == 0;
      if (tensor(f, g).is_zero() != disjoint) out.support_product_rule = false;
    }
  for (unsigned trial = 0; trial < 200; ++trial) {
    DimVector a, b, c;
    for (size_t i = 0; i < k; ++i) {
      a.dims.push_back(dim_pick(rng));
      b.dims.push_back(dim_pick(rng));
      c.dims.push_back(dim_pick(rng));
    }
    const auto f = random_morphism(ring, a, b, rng);
    const auto g = random_morphism(ring, b, c, rng);
    const auto sf = support(f), sg = support(g);
    std::set<size_t> inter;
    for (size_t i : sf.indices)
      if (sg.indices.count(i)) inter.insert(i);
    if (tensor(f, g).is_zero() != inter.empty()) out.support_product_rule = false;
    for (size_t i : support(compose(g, f)).indices)
      if (!inter.count(i)) out.support_composition = false;
  }

  // quotient fullness: extend-by-zero is a section, kernel dims match
  out.quotient_fullness = true;
  for (const auto& ideal : serre) {
    if (ideal.centre_ideal.subset().size() == k) continue;  // unit ideal
    DimVector a, b;
    for (size_t i = 0; i < k; ++i) {
      a.dims.push_back(std::max(1u, std::min(max_dim, static_cast<unsigned>(1 + i % 2))));
      b.dims.push_back(1);
    }
    const auto q = quotient_map(ring, a, b, random_morphism(ring, a, b, rng), ideal.centre_ideal);
    size_t kernel_dim = 0, quotient_dim = 0, total_dim = 0;
    for (size_t i = 0; i < k; ++i) {
      total_dim += a.dims[i] * b.dims[i];
      if (ideal.centre_ideal.subset().count(i))
        kernel_dim += a.dims[i] * b.dims[i];
    }
    for (size_t i = 0; i < q.kept_factors.size(); ++i)
      quotient_dim += q.source.dims[i] * q.target.dims[i];
    if (kernel_dim + quotient_dim != total_dim) out.quotient_fullness = false;
    // surjectivity: any quotient morphism lifts by placing zero blocks elsewhere
    auto lifted = BlockMorphism(ring, a, b);
    for (size_t i = 0; i < q.kept_factors.size(); ++i) lifted.block(q.kept_factors[i]) = q.map.block(i);
    const auto q2 = quotient_map(ring, a, b, lifted, ideal.centre_ideal);
    if (!(q2.map == q.map)) out.quotient_fullness = false;
  }

  // killed in every maximal quotient => zero; assembly from the quotients
  out.joint_faithfulness = true;
  out.factor_decomposition = true;
  const auto spec = spectrum(ring);
  for (unsigned trial = 0; trial < 100; ++trial) {
    DimVector a, b;
    for (size_t i = 0; i < k; ++i) {
      a.dims.push_back(dim_pick(rng));
      b.dims.push_back(dim_pick(rng));
    }
    const auto f = random_morphism(ring, a, b, rng);
    bool all_zero = true;
    size_t hom_dim = 0, pieces_dim = 0;
    for (size_t i = 0; i < k; ++i) hom_dim += a.dims[i] * b.dims[i];
    BlockMorphism reassembled(ring, a, b);
    for (const auto& prime : spec.primes) {
      const auto q = quotient_map(ring, a, b, f, prime);
      if (!q.map.is_zero()) all_zero = false;
      for (size_t i = 0; i < q.kept_factors.size(); ++i) {
        pieces_dim += q.source.dims[i] * q.target.dims[i];
        reassembled.block(q.kept_factors[i]) = q.map.block(i);
      }
    }
    if (all_zero && !f.is_zero()) out.joint_faithfulness = false;
    if (pieces_dim != hom_dim) out.factor_decomposition = false;
    if (!(reassembled == f)) out.factor_decomposition = false;
  }

  // the prime section against centre membership
  out.sigma_section = true;
  for (const auto& prime : spec.primes) {
    const auto idems = boolflat::all_idempotents(k);
    for (const auto& e : idems) {
      const auto z = e.to_elem(ring);
      const auto f = central(ring, ones, z);
      if (sigma_membership(f, prime, k) != prime.contains(ring, z)) out.sigma_section = false;
    }
  }
  return out;
}

}  // namespace tenspec::projcat

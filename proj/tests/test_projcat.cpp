#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "tenspec/projcat.hpp"

using namespace tenspec;
using namespace tenspec::projcat;

namespace {

DimVector dv(std::initializer_list<unsigned> dims) { return DimVector{dims}; }

BlockMorphism diag(const ProductRing& ring, const DimVector& a,
                   std::initializer_list<long> scalars) {
  boolflat::RingElem z;
  for (long s : scalars) z.push_back(Rational(s));
  return central(ring, a, ring.normalize(z));
}

}  // namespace

TEST_CASE("field matrices") {
  const boolflat::FieldDesc f3{3};
  FMat m(f3, 2, 2);
  m.set(0, 0, Rational(4));  // 1 mod 3
  m.set(0, 1, Rational(2));
  m.set(1, 0, Rational(1));
  m.set(1, 1, Rational(1));
  CHECK(m.at(0, 0) == Rational(1));
  CHECK(m.rank() == 2);
  const auto inv = m.inverse();
  REQUIRE(inv.has_value());
  CHECK(m.mul(*inv) == FMat::identity(f3, 2));
  FMat singular(f3, 2, 2);
  singular.set(0, 0, Rational(1));
  singular.set(1, 0, Rational(2));
  CHECK(singular.rank() == 1);
  CHECK_FALSE(singular.inverse().has_value());
}

TEST_CASE("support of morphisms and objects") {
  const auto ring = ProductRing::parse("Q^2");
  const auto one = dv({1, 1});
  CHECK(support(diag(ring, one, {1, 0})).indices == std::set<size_t>{0});
  CHECK(support(BlockMorphism(ring, one, one)).indices.empty());
  CHECK(support(dv({0, 3})).indices == std::set<size_t>{1});
  // supports intersect under tensor
  std::mt19937 rng(41);
  std::uniform_int_distribution<int> entry(-2, 2);
  for (int trial = 0; trial < 100; ++trial) {
    BlockMorphism f(ring, one, one), g(ring, one, one);
    for (size_t i = 0; i < 2; ++i) {
      f.block(i).set(0, 0, Rational(entry(rng)));
      g.block(i).set(0, 0, Rational(entry(rng)));
    }
    std::set<size_t> expected;
    for (size_t i : support(f).indices)
      if (support(g).indices.count(i)) expected.insert(i);
    CHECK(support(tensor(f, g)).indices == expected);
  }
}

TEST_CASE("serre ideal enumeration") {
  CHECK(enumerate_serre_ideals(ProductRing::parse("Q")).size() == 2);
  const auto ideals = enumerate_serre_ideals(ProductRing::parse("Q^3"));
  CHECK(ideals.size() == 8);
  // membership: dims (0,3,0) lies in the ideal of support {2}
  for (const auto& ideal : ideals)
    if (ideal.objects_supported_in.indices == std::set<size_t>{1})
      CHECK(ideal.contains(dv({0, 3, 0})));
}

TEST_CASE("quotient maps") {
  const auto ring = ProductRing::parse("Q^2");
  const auto a = dv({2, 3}), b = dv({1, 2});
  std::mt19937 rng(43);
  BlockMorphism f(ring, a, b);
  f.block(0).set(0, 1, Rational(5));
  f.block(1).set(1, 2, Rational(7));
  const auto ideal = boolflat::RingIdeal::from_subset({1});
  const auto q = quotient_map(ring, a, b, f, ideal);
  CHECK(q.ring.size() == 1);
  CHECK(q.source == dv({2}));
  CHECK(q.target == dv({1}));
  CHECK(q.map.block(0).at(0, 1) == Rational(5));
  // zero ideal: identity functor
  const auto q0 = quotient_map(ring, a, b, f, boolflat::RingIdeal::from_subset({}));
  CHECK(q0.map == f);
  CHECK_THROWS_AS(quotient_map(ring, a, b, f, boolflat::RingIdeal::from_subset({0, 1})),
                  std::invalid_argument);
}

TEST_CASE("prime section membership") {
  const auto ring = ProductRing::parse("Q^2");
  const auto one = dv({1, 1});
  const auto p1 = boolflat::RingIdeal::from_subset({1});  // omits factor 0
  CHECK(sigma_membership(diag(ring, one, {0, 5}), p1, 2));
  CHECK_FALSE(sigma_membership(diag(ring, one, {1, 1}), p1, 2));
  CHECK_FALSE(sigma_membership(BlockMorphism::identity(ring, one), p1, 2));
  CHECK_THROWS_AS(sigma_membership(diag(ring, one, {1, 1}),
                                   boolflat::RingIdeal::from_subset({}), 2),
                  std::invalid_argument);
  // primality seen on 1x1 blocks: product inside iff one factor inside
  std::mt19937 rng(47);
  std::uniform_int_distribution<int> entry(-2, 2);
  for (int trial = 0; trial < 200; ++trial) {
    const auto f = diag(ring, one, {entry(rng), entry(rng)});
    const auto g = diag(ring, one, {entry(rng), entry(rng)});
    CHECK(sigma_membership(tensor(f, g), p1, 2) ==
          (sigma_membership(f, p1, 2) || sigma_membership(g, p1, 2)));
  }
}

TEST_CASE("splitting from disjoint supports") {
  const auto ring = ProductRing::parse("Q^2");
  // sub (1,0) into (1,2): cokernel support {1}, disjoint from {0}
  const auto sub = dv({1, 0}), whole = dv({1, 2});
  BlockMorphism inc(ring, sub, whole);
  inc.block(0).set(0, 0, Rational(3));
  const auto result = split_check(ring, sub, whole, inc);
  REQUIRE(result.retraction.has_value());
  CHECK(compose(*result.retraction, inc) == BlockMorphism::identity(ring, sub));
  // zero subobject splits trivially
  const auto zero_sub = split_check(ring, dv({0, 0}), whole, BlockMorphism(ring, dv({0, 0}), whole));
  CHECK(zero_sub.retraction.has_value());
  // overlapping supports return the intersection witness
  BlockMorphism inc2(ring, dv({1, 0}), dv({2, 0}));
  inc2.block(0).set(0, 0, Rational(1));
  const auto overlap = split_check(ring, dv({1, 0}), dv({2, 0}), inc2);
  CHECK_FALSE(overlap.retraction.has_value());
  CHECK(overlap.overlap.indices == std::set<size_t>{0});
  // non-injective inclusions are rejected
  CHECK_THROWS_AS(split_check(ring, dv({1, 0}), whole, BlockMorphism(ring, dv({1, 0}), whole)),
                  std::invalid_argument);
}

TEST_CASE("subobjects of the unit: tensor is intersection, exhaustive at four factors") {
  const auto ring = ProductRing::parse("Q^4");
  for (uint32_t m1 = 0; m1 < 16; ++m1)
    for (uint32_t m2 = 0; m2 < 16; ++m2) {
      DimVector u, v;
      for (size_t i = 0; i < 4; ++i) {
        u.dims.push_back((m1 >> i) & 1);
        v.dims.push_back((m2 >> i) & 1);
      }
      std::set<size_t> expected;
      for (size_t i : support(u).indices)
        if (support(v).indices.count(i)) expected.insert(i);
      CHECK(support(tensor(u, v)).indices == expected);
      // the support idempotents multiply accordingly
      const auto eu = support_idempotent(BlockMorphism::identity(ring, u));
      const auto ev = support_idempotent(BlockMorphism::identity(ring, v));
      CHECK(eu.band(ev).support() == expected);
    }
}

TEST_CASE("middle support of a short exact sequence is the union") {
  const auto ring = ProductRing::parse("Q^3");
  std::mt19937 rng(53);
  std::uniform_int_distribution<unsigned> d(0, 2);
  for (int trial = 0; trial < 100; ++trial) {
    DimVector sub, quot;
    for (int i = 0; i < 3; ++i) {
      sub.dims.push_back(d(rng));
      quot.dims.push_back(d(rng));
    }
    const auto mid = direct_sum(sub, quot);
    std::set<size_t> expected;
    for (size_t i : support(sub).indices) expected.insert(i);
    for (size_t i : support(quot).indices) expected.insert(i);
    CHECK(support(mid).indices == expected);
  }
}

TEST_CASE("model checks pass over small rings") {
  CHECK(run_model_checks(ProductRing::parse("F2xF2"), 2, 1).all());
  CHECK(run_model_checks(ProductRing::parse("F2xF2xF2"), 2, 2).all());
  CHECK(run_model_checks(ProductRing::parse("Q^3"), 2, 3).all());
  CHECK(run_model_checks(ProductRing::parse("QxF3"), 2, 4).all());
}

TEST_CASE("spectrum of the model category") {
  const auto spec = spectrum(ProductRing::parse("Q^3"));
  CHECK(spec.poset.size() == 3);
  CHECK(spec.primes.size() == 3);
  for (const auto& p : spec.primes) CHECK(p.is_prime(3));
  CHECK(spectral::check_spectral_map(spec.sigma));
  CHECK(spectral::check_spectral_map(spec.pi));
  for (size_t i = 0; i < 3; ++i) {
    const auto round = spec.pi.apply(spec.sigma.apply(spectral::Point(i)));
    CHECK(std::get<size_t>(round) == i);
  }
}

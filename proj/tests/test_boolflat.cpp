#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "tenspec/boolflat.hpp"

using namespace tenspec;
using namespace tenspec::boolflat;

namespace {

BoolElem be(std::initializer_list<size_t> atoms_1based) {
  std::set<size_t> s;
  for (size_t a : atoms_1based) s.insert(a - 1);
  return BoolElem(std::move(s));
}

// oracle: the Boolean ideal generated by a family, by exhaustive closure
std::set<BoolElem> generated_boolean_ideal(size_t k, const std::vector<BoolElem>& gens) {
  // over a powerset algebra the ideal is everything below the union
  BoolElem top;
  for (const auto& g : gens) top = top.bxor(g.bxor(top.band(g)));  // union via xor/and
  std::set<BoolElem> out;
  for (const auto& e : all_idempotents(k))
    if (e.subset_of(top)) out.insert(e);
  return out;
}

}  // namespace

TEST_CASE("ring parsing and arithmetic") {
  const auto q3 = ProductRing::parse("Q^3");
  CHECK(q3.size() == 3);
  CHECK(q3.str() == "QxQxQ");
  const auto mixed = ProductRing::parse("F2xF3xF5");
  CHECK(mixed.size() == 3);
  CHECK(mixed.factor(1).p == 3);
  CHECK_THROWS_AS(ProductRing::parse("F4"), std::invalid_argument);  // 4 is not prime
  CHECK_THROWS_AS(ProductRing::parse(""), std::invalid_argument);

  // mod-p normalization: 1/2 = 2 in F3
  const auto f3 = ProductRing::parse("F3");
  CHECK(f3.normalize({Rational(1, 2)})[0] == Rational(2));
  CHECK(f3.mul({Rational(2)}, {Rational(2)})[0] == Rational(1));
}

TEST_CASE("orthogonalize worked example") {
  const auto ring = ProductRing::parse("Q^3");
  const auto result = orthogonalize(ring, {be({1, 2}), be({2, 3})});
  REQUIRE(result.orthogonal.size() == 3);
  CHECK(result.orthogonal[0] == be({2}));
  CHECK(result.orthogonal[1] == be({1}));
  CHECK(result.orthogonal[2] == be({3}));
  CHECK(result.principal == be({1, 2, 3}));
}

TEST_CASE("orthogonalize degenerate inputs") {
  const auto ring = ProductRing::parse("Q^3");
  const auto single = orthogonalize(ring, {be({1, 3})});
  CHECK(single.orthogonal == std::vector<BoolElem>{be({1, 3})});
  CHECK(single.principal == be({1, 3}));
  const auto repeated = orthogonalize(ring, {be({2}), be({2})});
  CHECK(repeated.principal == be({2}));
  CHECK(generated_boolean_ideal(3, repeated.orthogonal) ==
        generated_boolean_ideal(3, {be({2})}));
  CHECK_THROWS_AS(orthogonalize(ring, {}), std::invalid_argument);
}

TEST_CASE("orthogonalize randomized: orthogonality, generation, principality, size bound") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 300; ++trial) {
    const size_t k = 1 + trial % 6;
    const ProductRing ring(std::vector<FieldDesc>(k, FieldDesc{0}));
    std::uniform_int_distribution<uint32_t> mask(0, (1u << k) - 1);
    const size_t count = 1 + trial % 4;
    std::vector<BoolElem> gens;
    for (size_t i = 0; i < count; ++i) {
      std::set<size_t> s;
      const uint32_t m = mask(rng);
      for (size_t b = 0; b < k; ++b)
        if (m & (1u << b)) s.insert(b);
      gens.emplace_back(std::move(s));
    }
    const auto result = orthogonalize(ring, gens);
    CHECK(result.orthogonal.size() <= (size_t{1} << count) - 1);
    for (size_t i = 0; i < result.orthogonal.size(); ++i)
      for (size_t j = i + 1; j < result.orthogonal.size(); ++j)
        CHECK(result.orthogonal[i].orthogonal_to(result.orthogonal[j]));
    CHECK(generated_boolean_ideal(k, result.orthogonal) == generated_boolean_ideal(k, gens));
    // every generator is a multiple of the principal element
    for (const auto& g : gens) CHECK(g.band(result.principal) == g);
  }
}

TEST_CASE("idempotents of an ideal") {
  const auto q2 = ProductRing::parse("Q^2");
  const auto ideal = RingIdeal(q2, {{Rational(0), Rational(1)}});
  const auto idems = idempotents_of_ideal(q2, ideal);
  CHECK(idems == std::set<BoolElem>{BoolElem{}, be({2})});

  const auto full = RingIdeal(q2, {{Rational(1), Rational(1)}});
  CHECK(idempotents_of_ideal(q2, full).size() == 4);

  const auto mixed = ProductRing::parse("F2xF3xF5");
  const auto gen = RingIdeal(mixed, {{Rational(1), Rational(1), Rational(0)}});
  // membership oracle, coordinatewise
  for (const auto& e : idempotents_of_ideal(mixed, gen))
    CHECK(e.subset_of(be({1, 2})));
  CHECK(idempotents_of_ideal(mixed, gen).size() == 4);
}

TEST_CASE("ideal of idempotents and the precondition") {
  const auto q3 = ProductRing::parse("Q^3");
  CHECK(ideal_of_idempotents(q3, {BoolElem{}}).subset().empty());
  const std::set<BoolElem> J{BoolElem{}, be({1}), be({2}), be({1, 2})};
  CHECK(ideal_of_idempotents(q3, J).subset() == std::set<size_t>{0, 1});
  // not meet-closed against everything? {e} alone misses zero
  CHECK_THROWS_AS(ideal_of_idempotents(q3, {be({1})}), std::invalid_argument);
  // missing the orthogonal sum
  CHECK_THROWS_AS(ideal_of_idempotents(q3, {BoolElem{}, be({1}), be({2})}),
                  std::invalid_argument);
}

TEST_CASE("round trips on every ideal, up to five factors") {
  for (size_t k = 1; k <= 5; ++k) {
    const ProductRing ring(std::vector<FieldDesc>(k, FieldDesc{0}));
    CHECK(verify_ideal_correspondence(ring));
  }
  CHECK(verify_ideal_correspondence(ProductRing::parse("F2xF3xF5")));
}

TEST_CASE("coordinate-function isomorphism") {
  const auto q3 = ProductRing::parse("Q^3");
  const RingElem a{Rational(1), Rational(2), Rational(2)};
  CHECK(cont_iso_apply(q3, a) == std::vector<Rational>{Rational(1), Rational(2), Rational(2)});
  CHECK(cont_iso_apply(q3, q3.one()) ==
        std::vector<Rational>{Rational(1), Rational(1), Rational(1)});
  // indicator of the second point pulls back to the idempotent (0,1,0)
  CHECK(cont_iso_inverse(q3, {Rational(0), Rational(1), Rational(0)}) ==
        RingElem{Rational(0), Rational(1), Rational(0)});
  CHECK_THROWS_AS(cont_iso_apply(ProductRing::parse("QxF2"), {Rational(1), Rational(1)}),
                  std::invalid_argument);
}

TEST_CASE("coordinate-function isomorphism verified for several rings") {
  for (size_t k = 1; k <= 5; ++k)
    CHECK(verify_cont_iso(ProductRing(std::vector<FieldDesc>(k, FieldDesc{0}))));
  CHECK(verify_cont_iso(ProductRing::parse("F2xF2xF2")));
  CHECK(verify_cont_iso(ProductRing::parse("F3^4")));
}

TEST_CASE("boolean ops match the ring formulas on idempotents") {
  const auto ring = ProductRing::parse("Q^4");
  for (const auto& e : all_idempotents(4))
    for (const auto& f : all_idempotents(4)) {
      // e (+) f = e + f - 2ef and e ∧ f = ef, as ring elements
      const auto re = e.to_elem(ring), rf = f.to_elem(ring);
      const auto prod = ring.mul(re, rf);
      const auto sum = ring.add(ring.add(re, rf), ring.neg(ring.add(prod, prod)));
      CHECK(BoolElem::from_elem(ring, sum) == e.bxor(f));
      CHECK(BoolElem::from_elem(ring, prod) == e.band(f));
    }
}

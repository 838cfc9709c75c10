#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tenspec/freemod.hpp"
#include "tenspec/idealcalc.hpp"

using namespace tenspec;
using namespace tenspec::idealcalc;
using wbcat::Parameter;
using wbcat::WBMorphism;
using wbcat::Word;

namespace {

Word W(const char* s) { return Word::parse(s); }

WBMorphism one_minus_swap(const Parameter& param) {
  return WBMorphism::identity(W("uu"), param) - wbcat::braiding(W("u"), W("u"), param);
}

}  // namespace

TEST_CASE("probe window closure under duals and the unit") {
  const ProbeWindow w({W("uud")});
  CHECK(w.contains(W("")));
  CHECK(w.contains(W("uud")));
  CHECK(w.contains(W("udd")));  // the dual
  CHECK_FALSE(w.contains(W("u")));
  CHECK(ProbeWindow::words_up_to(2).objects().size() == 7);
  CHECK(ProbeWindow::words_up_to(3).objects().size() == 15);
}

TEST_CASE("ideal generated by the strand identity at t = 0 misses the unit") {
  const Parameter at0 = Parameter::at(Rational(0));
  const auto window = ProbeWindow::words_up_to(2);
  const auto ideal = generate_ideal({WBMorphism::identity(W("u"), at0)}, window);
  // every closure of the strand makes a loop, so a factor 0
  CHECK_FALSE(ideal.member(WBMorphism::identity(W(""), at0)));
  // the strand itself and its saturations are inside
  CHECK(ideal.member(WBMorphism::identity(W("u"), at0)));
  CHECK(ideal.member(wbcat::braiding(W("u"), W("u"), at0)));
  // cup and cap lie in the ideal generated by 1_L
  CHECK(ideal.member(wbcat::cup(W("ud"), at0)));
}

TEST_CASE("the unit generates everything") {
  const Parameter at0 = Parameter::at(Rational(0));
  const auto window = ProbeWindow::words_up_to(2);
  const auto ideal = generate_ideal({WBMorphism::identity(W(""), at0)}, window);
  for (const auto& [key, basis] : ideal.spans()) CHECK(basis.rank() == basis.ambient_dim());
}

TEST_CASE("empty generators give the zero spans") {
  const auto window = ProbeWindow::words_up_to(2);
  const auto ideal = generate_ideal({}, window, Parameter::at(Rational(1)));
  CHECK(ideal.total_rank() == 0);
  CHECK(ideal.member(WBMorphism::zero(W("u"), W("u"), Parameter::at(Rational(1)))));
  CHECK_FALSE(ideal.member(WBMorphism::identity(W("u"), Parameter::at(Rational(1)))));
  CHECK_THROWS_AS(generate_ideal({}, window), std::invalid_argument);
}

TEST_CASE("membership errors outside the window") {
  const auto window = ProbeWindow::words_up_to(2);
  const auto ideal = generate_ideal({}, window, Parameter::at(Rational(1)));
  CHECK_THROWS_AS(ideal.member(WBMorphism::identity(W("uuu"), Parameter::at(Rational(1)))),
                  std::invalid_argument);
}

TEST_CASE("trace-form radical examples") {
  // t = 1: kernel on the double strand spanned by identity minus swap
  const auto window = ProbeWindow::words_up_to(2);
  const auto n1 = tr_star(window, Rational(1));
  const auto f = one_minus_swap(Parameter::at(Rational(1)));
  CHECK(n1.member(f));
  CHECK(n1.span({W("uu"), W("uu")}).rank() == 1);
  // t = 0: the strand identity itself is in the radical
  const auto n0 = tr_star(window, Rational(0));
  CHECK(n0.member(WBMorphism::identity(W("u"), Parameter::at(Rational(0)))));
  CHECK(n0.span({W("u"), W("u")}).rank() == 1);
  // generic t: nonzero Gram determinant, zero kernel
  const auto analysis = gram_analysis(W("uu"));
  CHECK(analysis.det == Poly::t(4) - Poly::t(2));
  CHECK(analysis.nullity == 0);
  CHECK(analysis.roots.all_integer);
}

TEST_CASE("radical output is closed under the ideal moves") {
  const auto window = ProbeWindow::words_up_to(2);
  CHECK(verify_closure(tr_star(window, Rational(1)), 8));
  CHECK(verify_closure(tr_star(window, Rational(0)), 8));
}

TEST_CASE("the closure checker rejects a bare span") {
  // the line through the strand identity alone is not an ideal
  const Parameter at1 = Parameter::at(Rational(1));
  const auto window = ProbeWindow::words_up_to(2);
  IdealSpan bare(window, at1);
  bare.insert(WBMorphism::identity(W("u"), at1));
  CHECK_FALSE(verify_closure(bare, 8));
}

TEST_CASE("centre restriction of the radical is the zero ideal") {
  // End(1) is the field Q at every specialization, so the Gram pairing on the
  // unit pair is nondegenerate and the radical restricts to zero there
  const auto window = ProbeWindow::words_up_to(2);
  for (long a : {-1, 0, 1, 2}) {
    const auto radical = tr_star(window, Rational(a));
    CHECK(radical.span({W(""), W("")}).rank() == 0);
    // and the span-form ideal generated from the centre ideal 0 sits inside
    CHECK(radical.includes(generate_ideal({}, window, Parameter::at(Rational(a)))));
  }
}

TEST_CASE("kernel inclusions do not reverse") {
  // the (1|0) kernel is not contained in the (2|1) kernel
  const auto window = ProbeWindow::words_up_to(2);
  const auto k10 = functor_kernel_ideal(1, 0, window);
  const auto k21 = functor_kernel_ideal(2, 1, window);
  CHECK(k10.includes(k21));
  CHECK_FALSE(k21.includes(k10));
}

TEST_CASE("functor kernels and the prime chain on windows") {
  const auto window = ProbeWindow::words_up_to(3);
  const auto k10 = functor_kernel_ideal(1, 0, window);
  const auto k21 = functor_kernel_ideal(2, 1, window);
  CHECK(k10.includes(k21));
  const auto f = one_minus_swap(Parameter::at(Rational(1)));
  CHECK(k10.member(f));
  CHECK_FALSE(k21.member(f));
  CHECK(k10.span({W("uu"), W("uu")}).rank() == 1);
  // the kernel ideal agrees with the radical at the integer value
  CHECK(k10 == tr_star(window, Rational(1)));
}

TEST_CASE("kernel ideals are closed under the ideal moves") {
  const auto window = ProbeWindow::words_up_to(2);
  CHECK(verify_closure(functor_kernel_ideal(1, 0, window), 8));
}

TEST_CASE("sampled integrality of kernel primes") {
  const auto window = ProbeWindow::words_up_to(3);
  CHECK(sample_integrality(functor_kernel_ideal(1, 0, window), 99, 40));
  CHECK(sample_integrality(tr_star(window, Rational(2)), 7, 40));
}

TEST_CASE("nilpotence probe never overclaims") {
  const auto window = ProbeWindow::words_up_to(4);
  const Parameter at1 = Parameter::at(Rational(1));
  const IdealSpan zero(window, at1);
  const auto f = one_minus_swap(at1);
  // f lies in the radical but no tensor power vanishes
  const auto verdict = nilpotent_member(f, zero, 2);
  CHECK_FALSE(verdict.found);
  CHECK(nilpotent_member(WBMorphism::zero(W("u"), W("u"), at1), zero, 3).power == 1);
  const auto n1 = tr_star(window, Rational(1));
  CHECK(nilpotent_member(f, n1, 2).power == 1);  // membership at the first power
  CHECK_THROWS_AS(nilpotent_member(f, zero, 5), BudgetError);
}

TEST_CASE("quasi-invertibility verdicts") {
  const auto window = ProbeWindow::words_up_to(2);
  const Parameter at2 = Parameter::at(Rational(2));
  // a scaled unit has a direct section
  const auto two = WBMorphism::identity(W(""), at2).scale(Rational(2));
  const auto yes = quasi_invertible(two, window);
  CHECK(yes.kind == QuasiInvertibleVerdict::Kind::Yes);
  // the zero morphism is provably not quasi-invertible
  CHECK(quasi_invertible(WBMorphism::zero(W("u"), W("u"), at2), window).kind ==
        QuasiInvertibleVerdict::Kind::No);
  // the cap closes to t = 2, so scaling the cup by 1/2 factors the unit
  const auto verdict = quasi_invertible(wbcat::cap(W("ud"), at2), window);
  REQUIRE(verdict.kind == QuasiInvertibleVerdict::Kind::Yes);
  const auto fc = wbcat::tensor(wbcat::cap(W("ud"), at2),
                                WBMorphism::identity(*verdict.witness_object, at2));
  const auto unit = wbcat::compose(*verdict.g, wbcat::compose(fc, *verdict.h));
  CHECK(unit == WBMorphism::identity(W(""), at2));
  // at t = 0 the cap has no window witness
  const auto unknown = quasi_invertible(wbcat::cap(W("ud"), Parameter::at(Rational(0))), window);
  CHECK(unknown.kind == QuasiInvertibleVerdict::Kind::Unknown);
  // generically t is not invertible, so the cap stays unknown
  CHECK(quasi_invertible(wbcat::cap(W("ud"), Parameter::generic()), window).kind ==
        QuasiInvertibleVerdict::Kind::Unknown);
}

TEST_CASE("chain spectrum at n = 1") {
  const auto chain = chain_spectrum(1, 1, ProbeWindow::words_up_to(3));
  CHECK(chain.m0_is_trace_radical);
  CHECK(chain.pq == std::vector<std::pair<unsigned, unsigned>>{{1, 0}, {2, 1}});
  CHECK(chain.ideals[1].total_rank() == 0);
  REQUIRE_FALSE(chain.witnesses.empty());
  // the canonical witness: identity minus swap separates the two kernels
  const auto f = one_minus_swap(Parameter::at(Rational(1)));
  CHECK(chain.ideals[0].member(f));
  CHECK_FALSE(chain.ideals[1].member(f));
  CHECK(chain.maps_spectral);
  CHECK(chain.pi_sigma_identity);
}

TEST_CASE("chain spectrum at n = 0") {
  const auto chain = chain_spectrum(0, 1, ProbeWindow::words_up_to(2));
  CHECK(chain.m0_is_trace_radical);
  CHECK(chain.pq == std::vector<std::pair<unsigned, unsigned>>{{0, 0}, {1, 1}});
  const auto strand = WBMorphism::identity(W("u"), Parameter::at(Rational(0)));
  CHECK(chain.ideals[0].member(strand));
  CHECK_FALSE(chain.ideals[1].member(strand));
}

TEST_CASE("chain spectrum at n = -1 mirrors the positive side") {
  const auto chain = chain_spectrum(-1, 1, ProbeWindow::words_up_to(2));
  CHECK(chain.pq == std::vector<std::pair<unsigned, unsigned>>{{0, 1}, {1, 2}});
  CHECK(chain.m0_is_trace_radical);
}

TEST_CASE("tensor square of the radical returns the radical") {
  const auto window = ProbeWindow::words_up_to(2);
  const auto m0 = tr_star(window, Rational(1));
  const auto square = tensor_square_span(m0, &m0);
  CHECK(square == m0);
}

TEST_CASE("schur vanishing against tags and spans") {
  const symgroup::Partition wedge({1, 1});
  CHECK(schur_vanishes(wedge, TensorPrimeTag{FunctorKernelTag{1, 0}}, Rational(1)));
  CHECK_FALSE(schur_vanishes(wedge, TensorPrimeTag{FunctorKernelTag{2, 1}}, Rational(1)));
  CHECK(schur_vanishes(wedge, TensorPrimeTag{TraceRadicalTag{Rational(1)}}, Rational(1)));
  const auto window = ProbeWindow::words_up_to(2);
  CHECK(schur_vanishes(wedge, tr_star(window, Rational(1))));
  // the two-row symmetrizer acts by zero on the unit, the symmetric one by 2
  CHECK(symmetrizer_unit_scalar(wedge) == Rational(0));
  CHECK(symmetrizer_unit_scalar(symgroup::Partition({2})) == Rational(2));
}

TEST_CASE("small ring parsing and primes") {
  const auto z12 = SmallRing::parse("Z/12");
  const auto primes = ring_primes(z12);
  REQUIRE(primes.size() == 2);
  CHECK(primes[0].name == "(2)");
  CHECK(primes[1].name == "(3)");
  CHECK(primes[0].contains(z12, {Rational(6)}));
  CHECK_FALSE(primes[0].contains(z12, {Rational(3)}));
  CHECK(ring_primes(SmallRing::parse("F5")).size() == 1);
  CHECK(ring_primes(SmallRing::parse("Q")).size() == 1);
  CHECK(ring_primes(SmallRing::parse("F2xF3")).size() == 2);
  CHECK_THROWS_AS(SmallRing::parse("Z/2000"), std::invalid_argument);
}

TEST_CASE("free module spectra") {
  const auto spec12 = spec_free_modules(SmallRing::parse("Z/12"));
  CHECK(spec12.poset.size() == 2);
  CHECK(spec12.pi_of_ideal_checks);
  CHECK(spec12.integrality_checks);
  CHECK(spec12.trace_star_matches);
  REQUIRE(spec12.zero_ideal_witness.has_value());
  const auto& [x, y] = *spec12.zero_ideal_witness;
  CHECK(spec12.ring.is_zero_elem(spec12.ring.mul(x, y)));
  CHECK(spectral::check_spectral_map(spec12.pi));
  CHECK(spectral::check_spectral_map(spec12.sigma_tr));

  const auto spec_field = spec_free_modules(SmallRing::parse("Q"));
  CHECK(spec_field.poset.size() == 1);
  CHECK_FALSE(spec_field.zero_ideal_witness.has_value());

  const auto spec4 = spec_free_modules(SmallRing::parse("Z/4"));
  CHECK(spec4.poset.size() == 1);
  REQUIRE(spec4.zero_ideal_witness.has_value());
  CHECK(spec4.zero_ideal_witness->first[0] == Rational(2));
}

TEST_CASE("centre restriction and its section on free modules") {
  // pi(I(I)) = I over several principal ideals of Z/12: entrywise membership
  // restricted to End(1) recovers exactly the ideal
  const auto ring = SmallRing::parse("Z/12");
  const auto all = ring.enumerate();
  REQUIRE(all.has_value());
  for (long g : {2, 3, 4, 6}) {
    const BigInt generator = gcd(BigInt(g), BigInt(12));
    auto in_ideal = [&](const SmallRing::Elem& e) {
      return ring.normalize(e)[0].num() % generator == 0;
    };
    for (const auto& x : *all) {
      RMat f = rmat_zero(ring, 2, 2);
      for (auto& e : f.a) e = x;
      bool entrywise = true;
      for (const auto& e : f.a)
        if (!in_ideal(e)) entrywise = false;
      CHECK(entrywise == in_ideal(x));
    }
  }
}

TEST_CASE("windowed monotonicity of generated ideals") {
  const Parameter at0 = Parameter::at(Rational(0));
  const auto small = ProbeWindow::words_up_to(1);
  const auto large = ProbeWindow::words_up_to(2);
  const auto gen = WBMorphism::identity(W("u"), at0);
  const auto ideal_small = generate_ideal({gen}, small);
  const auto ideal_large = generate_ideal({gen}, large);
  for (const auto& [key, basis] : ideal_small.spans()) {
    CHECK(ideal_large.span(key).contains_all(basis));
  }
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "tenspec/poly.hpp"
#include "tenspec/scalar.hpp"

using namespace tenspec;

namespace {

Poly random_poly(std::mt19937& rng, int max_deg) {
  std::uniform_int_distribution<int> deg(0, max_deg);
  std::uniform_int_distribution<int> coeff(-4, 4);
  std::vector<Rational> c(deg(rng) + 1);
  for (auto& x : c) x = Rational(coeff(rng));
  return Poly(std::move(c));
}

}  // namespace

TEST_CASE("rational canonical form and parsing") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-2, -4) == Rational(1, 2));
  CHECK(Rational(3, -6).str() == "-1/2");
  CHECK(Rational::parse("7/3") == Rational(7, 3));
  CHECK(Rational::parse("-5") == Rational(-5));
  CHECK(Rational(6).str() == "6");
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
  CHECK_THROWS_AS(Rational(1, 2).inverse() / Rational(0), std::domain_error);
}

TEST_CASE("poly evaluation examples") {
  const Poly t2 = Poly::t(2);
  CHECK(poly_eval(t2, Rational(3)) == Rational(9));
  CHECK(poly_eval(Poly(), Rational(17)) == Rational(0));
  const Poly gram = Poly::t(4) - Poly::t(2);  // End(L⊗L) Gram determinant
  CHECK(poly_eval(gram, Rational(1)) == Rational(0));
}

TEST_CASE("poly multiplicativity under evaluation") {
  std::mt19937 rng(7);
  for (int i = 0; i < 200; ++i) {
    const Poly p = random_poly(rng, 4), q = random_poly(rng, 4);
    const Rational alpha(std::uniform_int_distribution<int>(-5, 5)(rng), 1 + i % 3);
    CHECK(poly_eval(p * q, alpha) == poly_eval(p, alpha) * poly_eval(q, alpha));
  }
}

TEST_CASE("poly string rendering") {
  CHECK((Poly::t(4) - Poly::t(2)).str() == "t^4 - t^2");
  CHECK(Poly().str() == "0");
  CHECK((Poly::t() - Poly(Rational(5))).str() == "t - 5");
  CHECK((Poly::t(2).scale(Rational(2)) + Poly(Rational(1))).str() == "2t^2 + 1");
  const auto coeffs = (Poly::t(4) - Poly::t(2)).coeff_strings();
  CHECK(coeffs == std::vector<std::string>{"0", "0", "-1", "0", "1"});
}

TEST_CASE("determinant examples") {
  const Poly t = Poly::t(), t2 = Poly::t(2);
  const std::vector<std::vector<Poly>> gram{{t2, t}, {t, t2}};
  CHECK(poly_matrix_det(gram) == Poly::t(4) - Poly::t(2));
  const Poly one(Rational(1)), zero;
  const std::vector<std::vector<Poly>> id3{{one, zero, zero}, {zero, one, zero}, {zero, zero, one}};
  CHECK(poly_matrix_det(id3) == one);
  const std::vector<std::vector<Poly>> repeated{{t, t2}, {t, t2}};
  CHECK(poly_matrix_det(repeated).is_zero());
  CHECK_THROWS_AS(poly_matrix_det({{t, t2}}), std::invalid_argument);
}

TEST_CASE("bareiss agrees with cofactor expansion up to size 4") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const size_t n = 1 + trial % 4;
    std::vector<std::vector<Poly>> m(n, std::vector<Poly>(n));
    for (auto& row : m)
      for (auto& e : row) e = random_poly(rng, 2);
    const Poly expected = poly_matrix_det_cofactor(m);
    CHECK(poly_matrix_det_bareiss(m) == expected);
    CHECK(poly_matrix_det(m) == expected);
  }
}

TEST_CASE("interpolated determinant path matches cofactor expansion") {
  // size 7 forces the evaluation-interpolation route
  std::mt19937 rng(13);
  std::vector<std::vector<Poly>> m(7, std::vector<Poly>(7));
  for (auto& row : m)
    for (auto& e : row) e = random_poly(rng, 1);
  CHECK(poly_matrix_det(m) == poly_matrix_det_cofactor(m));
}

TEST_CASE("integer roots examples") {
  const auto r1 = integer_roots(Poly::t(4) - Poly::t(2));
  CHECK(r1.roots == std::set<BigInt>{BigInt(-1), BigInt(0), BigInt(1)});
  CHECK(r1.all_integer);

  const auto r2 = integer_roots(Poly::t(2) + Poly(Rational(1)));
  CHECK(r2.roots.empty());
  CHECK_FALSE(r2.all_integer);

  const auto r3 = integer_roots(Poly::t() - Poly(Rational(5)));
  CHECK(r3.roots == std::set<BigInt>{BigInt(5)});
  CHECK(r3.all_integer);

  CHECK_THROWS_AS(integer_roots(Poly()), std::domain_error);
}

TEST_CASE("every reported root evaluates to zero") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 120; ++trial) {
    Poly p = random_poly(rng, 5);
    if (p.is_zero()) p = Poly(Rational(1));
    for (const auto& r : integer_roots(p).roots) CHECK(poly_eval(p, Rational(r)).is_zero());
  }
}

TEST_CASE("all-integer flag through constructed factorizations") {
  // (t-2)^2 (t+3) t: all roots integral
  const Poly p = (Poly::t() - Poly(Rational(2))) * (Poly::t() - Poly(Rational(2))) *
                 (Poly::t() + Poly(Rational(3))) * Poly::t();
  const auto r = integer_roots(p);
  CHECK(r.all_integer);
  CHECK(r.roots == std::set<BigInt>{BigInt(-3), BigInt(0), BigInt(2)});
  // (t-1)(t^2+2): residual quadratic is irrational
  const Poly q = (Poly::t() - Poly(Rational(1))) * (Poly::t(2) + Poly(Rational(2)));
  const auto rq = integer_roots(q);
  CHECK(rq.roots == std::set<BigInt>{BigInt(1)});
  CHECK_FALSE(rq.all_integer);
}

TEST_CASE("poly divexact and gcd") {
  const Poly p = (Poly::t() - Poly(Rational(3))) * (Poly::t(2) + Poly(Rational(1)));
  CHECK(p.divexact(Poly::t() - Poly(Rational(3))) == Poly::t(2) + Poly(Rational(1)));
  CHECK_THROWS_AS(p.divexact(Poly::t() - Poly(Rational(1))), std::domain_error);
  const Poly a = (Poly::t() - Poly(Rational(1))) * (Poly::t() - Poly(Rational(2)));
  const Poly b = (Poly::t() - Poly(Rational(1))) * (Poly::t() + Poly(Rational(4)));
  CHECK(gcd(a, b) == Poly::t() - Poly(Rational(1)));
}

TEST_CASE("scalar variants do not mix") {
  const Scalar g = Scalar::generic(Poly::t());
  const Scalar s = Scalar::specialized(Rational(2));
  CHECK_THROWS_AS(g + s, std::invalid_argument);
  CHECK_THROWS_AS(g * s, std::invalid_argument);
  CHECK(g.eval(Rational(2)) == Rational(2));
  CHECK(s.eval(Rational(99)) == Rational(2));
  CHECK((g * g).poly() == Poly::t(2));
}

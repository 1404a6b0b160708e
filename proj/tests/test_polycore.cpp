#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "chainlift/error.hpp"
#include "chainlift/parser.hpp"
#include "support/oracles.hpp"

using namespace chainlift;
namespace ct = chainlift::testing;

namespace {

RingPtr ring_xyz() {
  return PolyRing::make({"X", "Y", "Z"}, 0, Grading{1, 1, -1});
}

Polynomial P(const RingPtr& r, const std::string& s) {
  return parse_poly(s, r);
}

}  // namespace

TEST_CASE("coefficients stay exact and reduced") {
  Coeff a = Coeff::rational(2, 4);
  CHECK(a.str() == "1/2");
  Coeff b = Coeff::rational(-3, -6);  // canonical: positive denominator
  CHECK(b.str() == "1/2");
  CHECK((a - b).is_zero());
  CHECK((a * Coeff::rational(2)).is_one());
  CHECK(a.inverse().str() == "2");

  Coeff m = Coeff::of_long(7, 5);
  CHECK(m.str() == "2");
  CHECK((m * m.inverse()).is_one());
  CHECK_THROWS_AS(Coeff::of_long(0, 5).inverse(), Error);
  CHECK_THROWS_AS((void)(a + m), Error);
}

TEST_CASE("parse_poly: grammar, normalization, errors") {
  RingPtr r = ring_xyz();

  SUBCASE("X*Z is the monomial XZ") {
    Polynomial f = P(r, "X*Z");
    CHECK(f.term_count() == 1);
    CHECK(f.terms().begin()->first.exps() == std::vector<int>{1, 0, 1});
    CHECK(f.terms().begin()->second.is_one());
  }
  SUBCASE("0 is the empty association") {
    CHECK(P(r, "0").is_zero());
    CHECK(P(r, "0").term_count() == 0);
  }
  SUBCASE("(X+Y)^2 - X^2 - Y^2 - 2*X*Y collapses to 0") {
    CHECK(P(r, "(X+Y)^2 - X^2 - Y^2 - 2*X*Y").is_zero());
  }
  SUBCASE("fractions and leading minus") {
    CHECK(P(r, "3/4*X - 1/4*X").str() == "1/2*X");
    CHECK(P(r, "-X+1").str() == "-X+1");
    CHECK(P(r, "-(X-Y)") == P(r, "Y-X"));
  }
  SUBCASE("implicit multiplication is rejected") {
    CHECK_THROWS_AS(P(r, "XZ"), Error);  // unknown variable 'XZ'
    try {
      P(r, "XZ");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::UnknownVariable);
    }
  }
  SUBCASE("syntax errors carry a position") {
    try {
      P(r, "X+*Y");
      CHECK(false);
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::SyntaxError);
      CHECK(e.position() == 2);
    }
  }
  SUBCASE("bad characteristic on fraction denominators") {
    RingPtr f2 = PolyRing::make({"X", "Y"}, 2);
    CHECK_THROWS_AS(P(f2, "1/2*X"), Error);
    CHECK(P(f2, "1/3*X").str() == "X");  // 3 is invertible mod 2
  }
}

TEST_CASE("cmp_monomials: spec examples") {
  MonomialOrder lex = MonomialOrder::lex();
  MonomialOrder grevlex = MonomialOrder::grevlex();
  Monomial x({1, 0}), y2({0, 2}), x2y({2, 1}), xy2({1, 2});
  CHECK(cmp_monomials(lex, x, y2) > 0);
  CHECK(cmp_monomials(grevlex, x2y, xy2) > 0);
  CHECK(cmp_monomials(grevlex, x2y, x2y) == 0);
  CHECK_THROWS_AS(cmp_monomials(lex, x, Monomial({1, 0, 0})), Error);
}

TEST_CASE("monomial orders are multiplicative well-orders") {
  std::mt19937_64 rng(20240801);
  RingPtr r = ring_xyz();
  std::vector<MonomialOrder> orders{MonomialOrder::lex(),
                                    MonomialOrder::grlex(),
                                    MonomialOrder::grevlex(),
                                    MonomialOrder::block(1)};
  Monomial unit = Monomial::unit(3);
  for (int i = 0; i < 400; ++i) {
    Monomial a = ct::random_monomial(rng, r, 4);
    Monomial b = ct::random_monomial(rng, r, 4);
    Monomial c = ct::random_monomial(rng, r, 3);
    for (const auto& ord : orders) {
      int ab = cmp_monomials(ord, a, b);
      CHECK(cmp_monomials(ord, b, a) == -ab);
      // multiplicative
      CHECK(cmp_monomials(ord, a * c, b * c) == ab);
      // 1 is minimal
      if (!a.is_unit()) CHECK(cmp_monomials(ord, a, unit) > 0);
      CHECK((ab == 0) == (a == b));
    }
  }
}

TEST_CASE("block orders eliminate the leading block") {
  MonomialOrder block = MonomialOrder::block(1);
  // any monomial using var 0 beats any monomial that does not
  Monomial with_t({1, 0, 0}), without({0, 3, 2});
  CHECK(cmp_monomials(block, with_t, without) > 0);
}

TEST_CASE("polynomial arithmetic: spec examples") {
  RingPtr r = ring_xyz();
  CHECK((P(r, "X") + P(r, "-X")).is_zero());
  CHECK(P(r, "X+Y") * P(r, "X-Y") == P(r, "X^2-Y^2"));

  RingPtr f2 = PolyRing::make({"X", "Y"}, 2);
  Polynomial frob = parse_poly("X+Y", f2).pow(2);
  CHECK(frob == parse_poly("X^2+Y^2", f2));
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937_64 rng(20240802);
  RingPtr r = ring_xyz();
  for (int i = 0; i < 60; ++i) {
    Polynomial f = ct::random_poly(rng, r, 3, 4);
    Polynomial g = ct::random_poly(rng, r, 3, 4);
    Polynomial h = ct::random_poly(rng, r, 3, 4);
    CHECK((f + g) + h == f + (g + h));
    CHECK(f + g == g + f);
    CHECK(f * g == g * f);
    CHECK((f * g) * h == f * (g * h));
    CHECK(f * (g + h) == f * g + f * h);
    CHECK((f - f).is_zero());
  }
}

TEST_CASE("printer/parser round trip") {
  std::mt19937_64 rng(20240803);
  RingPtr r = ring_xyz();
  CHECK(P(r, "0").str() == "0");
  for (int i = 0; i < 120; ++i) {
    Polynomial f = ct::random_poly(rng, r, 4, 6);
    CHECK(parse_poly(f.str(), r) == f);
  }
  RingPtr f5 = PolyRing::make({"X", "Y"}, 5);
  for (int i = 0; i < 60; ++i) {
    Polynomial f = ct::random_poly(rng, f5, 4, 6);
    CHECK(parse_poly(f.str(), f5) == f);
  }
}

TEST_CASE("homogeneous_degree under the (1,1,-1) grading") {
  RingPtr r = ring_xyz();
  Grading w{1, 1, -1};
  CHECK(P(r, "X*Z").homogeneous_degree(w) == 0);
  CHECK(P(r, "X").homogeneous_degree(w) == 1);
  CHECK_FALSE(P(r, "Y^2*Z-1").homogeneous_degree(w).has_value());
  CHECK_THROWS_AS(P(r, "0").homogeneous_degree(w), Error);
}

TEST_CASE("project_degree: examples and decomposition") {
  RingPtr r = ring_xyz();
  Grading w{1, 1, -1};
  CHECK(P(r, "X*Z+X").project_degree(0, w) == P(r, "X*Z"));
  CHECK(P(r, "0").project_degree(0, w).is_zero());
  CHECK(P(r, "Y^2*Z-1").project_degree(0, w) == P(r, "-1"));

  std::mt19937_64 rng(20240804);
  for (int i = 0; i < 60; ++i) {
    Polynomial f = ct::random_poly(rng, r, 4, 6);
    if (f.is_zero()) continue;
    Polynomial sum = Polynomial::zero(r);
    for (long d : f.occurring_degrees(w)) {
      Polynomial piece = f.project_degree(d, w);
      // idempotent on its own degree
      CHECK(piece.project_degree(d, w) == piece);
      sum = sum + piece;
    }
    CHECK(sum == f);
  }
}

TEST_CASE("ring mismatch is reported") {
  RingPtr r = ring_xyz();
  RingPtr other = PolyRing::make({"U", "V"});
  CHECK_THROWS_AS((void)(P(r, "X") + parse_poly("U", other)), Error);
}

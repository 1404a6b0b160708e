#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "chainlift/error.hpp"
#include "chainlift/groebner.hpp"
#include "chainlift/parser.hpp"
#include "support/oracles.hpp"

using namespace chainlift;
namespace ct = chainlift::testing;

namespace {

RingPtr ring_xy() { return PolyRing::make({"X", "Y"}); }
RingPtr ring_xyz() { return PolyRing::make({"X", "Y", "Z"}); }

Polynomial P(const RingPtr& r, const std::string& s) {
  return parse_poly(s, r);
}

}  // namespace

TEST_CASE("divide: spec examples") {
  RingPtr r = ring_xy();
  MonomialOrder lex = MonomialOrder::lex();

  SUBCASE("exact divisibility") {
    DivisionResult d = divide(P(r, "X^2*Y"), {P(r, "X")}, lex);
    CHECK(d.remainder.is_zero());
    CHECK(d.quotients[0] == P(r, "X*Y"));
  }
  SUBCASE("irreducible heads stay in the remainder") {
    DivisionResult d =
        divide(P(r, "X-Y"), {P(r, "X*Y-1"), P(r, "Y^2-1")}, lex);
    CHECK(d.remainder == P(r, "X-Y"));
    CHECK(d.quotients[0].is_zero());
    CHECK(d.quotients[1].is_zero());
  }
  SUBCASE("zero input") {
    DivisionResult d = divide(P(r, "0"), {P(r, "X")}, lex);
    CHECK(d.remainder.is_zero());
    CHECK(d.quotients[0].is_zero());
  }
  SUBCASE("zero divisor rejected") {
    CHECK_THROWS_AS(divide(P(r, "X"), {P(r, "0")}, lex), Error);
  }
}

TEST_CASE("divide invariant on random inputs") {
  std::mt19937_64 rng(77001);
  RingPtr r = ring_xy();
  MonomialOrder ord = MonomialOrder::grevlex();
  for (int i = 0; i < 80; ++i) {
    Polynomial f = ct::random_poly(rng, r, 4, 5);
    std::vector<Polynomial> divisors{ct::random_poly(rng, r, 2, 3, false),
                                     ct::random_poly(rng, r, 2, 3, false)};
    DivisionResult d = divide(f, divisors, ord);
    Polynomial rebuilt = d.remainder;
    for (std::size_t j = 0; j < divisors.size(); ++j)
      rebuilt = rebuilt + d.quotients[j] * divisors[j];
    CHECK(rebuilt == f);
    // no remainder monomial is reducible
    for (const auto& [m, c] : d.remainder.terms())
      for (const auto& g : divisors)
        CHECK_FALSE(g.leading_monomial(ord).divides(m));
  }
}

TEST_CASE("buchberger: spec examples") {
  SUBCASE("lex basis of (XY-1, Y^2-1)") {
    RingPtr r = ring_xy();
    GroebnerBasis gb = buchberger(r, {P(r, "X*Y-1"), P(r, "Y^2-1")},
                                  MonomialOrder::lex());
    REQUIRE(gb.basis.size() == 2);
    CHECK(gb.basis[0] == P(r, "Y^2-1"));
    CHECK(gb.basis[1] == P(r, "X-Y"));
  }
  SUBCASE("principal ideal is itself, monic") {
    RingPtr r = ring_xy();
    GroebnerBasis gb =
        buchberger(r, {P(r, "2*X")}, MonomialOrder::grevlex());
    REQUIRE(gb.basis.size() == 1);
    CHECK(gb.basis[0] == P(r, "X"));
  }
  SUBCASE("(XZ, YZ) is already a basis under grevlex") {
    RingPtr r = ring_xyz();
    GroebnerBasis gb = buchberger(r, {P(r, "X*Z"), P(r, "Y*Z")},
                                  MonomialOrder::grevlex());
    REQUIRE(gb.basis.size() == 2);
    CHECK(gb.basis[0] == P(r, "Y*Z"));
    CHECK(gb.basis[1] == P(r, "X*Z"));
  }
  SUBCASE("all-zero generators give the empty basis") {
    RingPtr r = ring_xy();
    GroebnerBasis gb = buchberger(r, {P(r, "0")}, MonomialOrder::lex());
    CHECK(gb.basis.empty());
    CHECK(gb.is_zero());
  }
}

TEST_CASE("reduced basis properties on random ideals") {
  std::mt19937_64 rng(77002);
  RingPtr r = ring_xy();
  MonomialOrder ord = MonomialOrder::grevlex();
  for (int i = 0; i < 40; ++i) {
    std::vector<Polynomial> gens;
    int n = 1 + static_cast<int>(rng() % 3);
    for (int j = 0; j < n; ++j) gens.push_back(ct::random_poly(rng, r, 3, 3));
    GroebnerBasis gb = buchberger(r, gens, ord, true);

    // S-polynomials reduce to zero; elements are monic and mutually reduced.
    for (std::size_t a = 0; a < gb.basis.size(); ++a) {
      CHECK(gb.basis[a].leading_coeff(ord).is_one());
      for (std::size_t b = 0; b < gb.basis.size(); ++b) {
        if (a == b) continue;
        for (const auto& [m, c] : gb.basis[a].terms())
          CHECK_FALSE(gb.basis[b].leading_monomial(ord).divides(m));
        Monomial l = Monomial::lcm(gb.basis[a].leading_monomial(ord),
                                   gb.basis[b].leading_monomial(ord));
        Coeff one = Coeff::one(0);
        Polynomial s =
            gb.basis[a].times_term(l / gb.basis[a].leading_monomial(ord), one) -
            gb.basis[b].times_term(l / gb.basis[b].leading_monomial(ord), one);
        CHECK(reduce(s, gb).is_zero());
      }
    }
    // ascending leading monomials
    for (std::size_t a = 0; a + 1 < gb.basis.size(); ++a)
      CHECK(cmp_monomials(ord, gb.basis[a].leading_monomial(ord),
                          gb.basis[a + 1].leading_monomial(ord)) < 0);
    // cofactor rows reconstruct the basis
    for (std::size_t a = 0; a < gb.basis.size(); ++a) {
      Polynomial rebuilt = Polynomial::zero(r);
      for (std::size_t j = 0; j < gens.size(); ++j)
        rebuilt = rebuilt + (*gb.cofactors)[a][j] * gens[j];
      CHECK(rebuilt == gb.basis[a]);
    }
    // generators permuted: identical reduced basis
    std::vector<Polynomial> shuffled = gens;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    GroebnerBasis gb2 = buchberger(r, shuffled, ord);
    CHECK(gb.basis.size() == gb2.basis.size());
    for (std::size_t a = 0; a < gb.basis.size(); ++a)
      CHECK(gb.basis[a] == gb2.basis[a]);
    // idempotence
    GroebnerBasis gb3 = buchberger(r, gb.basis, ord);
    CHECK(gb3.basis.size() == gb.basis.size());
    for (std::size_t a = 0; a < gb.basis.size(); ++a)
      CHECK(gb3.basis[a] == gb.basis[a]);
  }
}

TEST_CASE("membership agrees with the degree-bounded linear oracle") {
  std::mt19937_64 rng(77003);
  RingPtr r = ring_xyz();
  MonomialOrder ord = MonomialOrder::grevlex();
  int checked = 0;
  for (int i = 0; i < 30; ++i) {
    std::vector<Polynomial> gens;
    int n = 1 + static_cast<int>(rng() % 3);
    for (int j = 0; j < n; ++j)
      gens.push_back(ct::random_poly(rng, r, 3, 3, false));
    GroebnerBasis gb = buchberger(r, gens, ord);

    // planted member: bounded cofactors by construction
    Polynomial member = Polynomial::zero(r);
    for (const auto& g : gens)
      member = member + ct::random_poly(rng, r, 2, 2) * g;
    // candidate non-member
    Polynomial probe = ct::random_poly(rng, r, 3, 3);

    for (const Polynomial& f : {member, probe}) {
      bool gb_member = reduce(f, gb).is_zero();
      bool oracle = ct::macaulay_membership(f, gens, f.total_degree() + 3).member;
      if (f == member) CHECK(oracle);
      CHECK(gb_member == oracle);
      ++checked;
    }
  }
  CHECK(checked >= 60);
}

TEST_CASE("extended_reduce: spec examples") {
  RingPtr r = ring_xy();
  MonomialOrder ord = MonomialOrder::grevlex();

  SUBCASE("XY over (X, Y^2)") {
    GroebnerBasis gb = buchberger(r, {P(r, "X"), P(r, "Y^2")}, ord, true);
    ExtendedReduction red = extended_reduce(P(r, "X*Y"), gb);
    CHECK(red.remainder.is_zero());
    CHECK(red.combination[0] == P(r, "Y"));
    CHECK(red.combination[1].is_zero());
  }
  SUBCASE("constants are irreducible") {
    GroebnerBasis gb = buchberger(r, {P(r, "X")}, ord, true);
    ExtendedReduction red = extended_reduce(P(r, "1"), gb);
    CHECK(red.remainder == P(r, "1"));
    CHECK(red.combination[0].is_zero());
  }
  SUBCASE("X-Y over (XY-1, Y^2-1): the hand identity") {
    GroebnerBasis gb = buchberger(r, {P(r, "X*Y-1"), P(r, "Y^2-1")},
                                  MonomialOrder::lex(), true);
    ExtendedReduction red = extended_reduce(P(r, "X-Y"), gb);
    CHECK(red.remainder.is_zero());
    CHECK(red.combination[0] == P(r, "Y"));
    CHECK(red.combination[1] == P(r, "-X"));
  }
  SUBCASE("missing cofactors are an error") {
    GroebnerBasis gb = buchberger(r, {P(r, "X")}, ord, false);
    CHECK_THROWS_AS(extended_reduce(P(r, "X"), gb), Error);
  }
}

TEST_CASE("extended_reduce reconstruction on random calls") {
  std::mt19937_64 rng(77004);
  RingPtr r = ring_xy();
  for (int i = 0; i < 40; ++i) {
    std::vector<Polynomial> gens{ct::random_poly(rng, r, 3, 3),
                                 ct::random_poly(rng, r, 2, 3)};
    GroebnerBasis gb = buchberger(r, gens, MonomialOrder::grevlex(), true);
    Polynomial f = ct::random_poly(rng, r, 4, 5);
    ExtendedReduction red = extended_reduce(f, gb);
    Polynomial rebuilt = red.remainder;
    for (std::size_t j = 0; j < gens.size(); ++j)
      rebuilt = rebuilt + red.combination[j] * gens[j];
    CHECK(rebuilt == f);
    CHECK(red.remainder == divide(f, gb.basis, gb.order).remainder);
  }
}

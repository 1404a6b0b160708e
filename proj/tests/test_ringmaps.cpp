#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "chainlift/error.hpp"
#include "chainlift/parser.hpp"
#include "chainlift/ringmap.hpp"
#include "support/oracles.hpp"

using namespace chainlift;
namespace ct = chainlift::testing;

namespace {

// The graded inclusion K[XZ,YZ] ⊆ K[X,Y,Z] presented as U ↦ XZ, V ↦ YZ.
struct GradedFixture {
  RingPtr A = PolyRing::make({"U", "V"});
  RingPtr B = PolyRing::make({"X", "Y", "Z"}, 0, Grading{1, 1, -1});
  RingMap phi{PresentedRing::plain(A), PresentedRing::plain(B),
              {parse_poly("X*Z", B), parse_poly("Y*Z", B)}};

  Polynomial a(const std::string& s) const { return parse_poly(s, A); }
  Polynomial b(const std::string& s) const { return parse_poly(s, B); }
  Ideal ia(const std::vector<std::string>& gens) const {
    std::vector<Polynomial> ps;
    for (const auto& s : gens) ps.push_back(a(s));
    return Ideal(A, ps);
  }
  Ideal ib(const std::vector<std::string>& gens) const {
    std::vector<Polynomial> ps;
    for (const auto& s : gens) ps.push_back(b(s));
    return Ideal(B, ps);
  }
};

}  // namespace

TEST_CASE("check_well_defined: spec examples") {
  RingPtr a = PolyRing::make({"U"});
  RingPtr b = PolyRing::make({"X"});
  Ideal u2(a, {parse_poly("U^2", a)});
  Ideal x2(b, {parse_poly("X^2", b)});

  SUBCASE("U^2 = 0 cannot map to X") {
    WellDefinedResult wd =
        check_well_defined(PresentedRing::make_quotient(a, u2),
                           PresentedRing::plain(b), {parse_poly("X", b)});
    CHECK_FALSE(wd.ok);
    REQUIRE(wd.violation.has_value());
    CHECK(*wd.violation == parse_poly("U^2", a));
    CHECK_THROWS_AS(RingMap(PresentedRing::make_quotient(a, u2),
                            PresentedRing::plain(b), {parse_poly("X", b)}),
                    Error);
  }
  SUBCASE("matching relations are fine") {
    WellDefinedResult wd = check_well_defined(
        PresentedRing::make_quotient(a, u2),
        PresentedRing::make_quotient(b, x2), {parse_poly("X", b)});
    CHECK(wd.ok);
  }
  SUBCASE("plain rings have nothing to violate") {
    GradedFixture fx;
    CHECK(check_well_defined(fx.phi).ok);
  }
}

TEST_CASE("apply: spec examples") {
  GradedFixture fx;
  CHECK(apply(fx.phi, fx.a("U")) == fx.b("X*Z"));
  CHECK(apply(fx.phi, fx.a("1")) == fx.b("1"));
  CHECK(apply(fx.phi, fx.a("U*V")) == fx.b("X*Y*Z^2"));
}

TEST_CASE("apply reduces modulo target relations") {
  RingPtr a = PolyRing::make({"U"});
  RingPtr b = PolyRing::make({"X"});
  Ideal x2(b, {parse_poly("X^2", b)});
  RingMap map(PresentedRing::plain(a), PresentedRing::make_quotient(b, x2),
              {parse_poly("X", b)});
  CHECK(apply(map, parse_poly("U^3+U", a)) == parse_poly("X", b));
}

TEST_CASE("extend_ideal: spec examples") {
  GradedFixture fx;
  CHECK(ideal_equal(extend_ideal(fx.phi, fx.ia({"U", "V"})),
                    fx.ib({"X*Z", "Y*Z"})));
  CHECK(extend_ideal(fx.phi, Ideal::zero(fx.A)).is_zero_ideal());
  CHECK(ideal_equal(extend_ideal(fx.phi, fx.ia({"U+V"})),
                    fx.ib({"X*Z+Y*Z"})));
}

TEST_CASE("contract_ideal: the graded fixture") {
  GradedFixture fx;
  SUBCASE("the principal prime (Z) contracts to (U,V)") {
    CHECK(ideal_equal(contract_ideal(fx.phi, fx.ib({"Z"})),
                      fx.ia({"U", "V"})));
  }
  SUBCASE("(X, Y^2*Z-1) contracts to (U), not to a principal 'XY'") {
    Ideal con = contract_ideal(fx.phi, fx.ib({"X", "Y^2*Z-1"}));
    CHECK(ideal_equal(con, fx.ia({"U"})));
    CHECK(membership(fx.a("U"), con));
    CHECK_FALSE(membership(fx.a("V"), con));
  }
  SUBCASE("contracting the zero ideal gives the kernel") {
    CHECK(ideal_equal(contract_ideal(fx.phi, Ideal::zero(fx.B)),
                      kernel(fx.phi)));
  }
}

TEST_CASE("kernel: spec examples") {
  SUBCASE("the graded inclusion is injective") {
    GradedFixture fx;
    CHECK(kernel(fx.phi).is_zero_ideal());
  }
  SUBCASE("cuspidal cubic: U -> T^2, V -> T^3") {
    RingPtr a = PolyRing::make({"U", "V"});
    RingPtr t = PolyRing::make({"T"});
    RingMap map(PresentedRing::plain(a), PresentedRing::plain(t),
                {parse_poly("T^2", t), parse_poly("T^3", t)});
    Ideal ker = kernel(map);
    CHECK(ideal_equal(ker, Ideal(a, {parse_poly("U^3-V^2", a)})));
    CHECK(apply(map, parse_poly("U^3-V^2", a)).is_zero());
    CHECK(primality_status(ker).verified());
  }
  SUBCASE("identity map") {
    RingPtr a = PolyRing::make({"U", "V"});
    RingMap id(PresentedRing::plain(a), PresentedRing::plain(a),
               {parse_poly("U", a), parse_poly("V", a)});
    CHECK(kernel(id).is_zero_ideal());
  }
}

TEST_CASE("contraction_property_check: spec examples") {
  GradedFixture fx;
  SUBCASE("holds on (U) for the direct summand") {
    ContractionCheck check = contraction_property_check(fx.phi, fx.ia({"U"}));
    CHECK(check.holds);
  }
  SUBCASE("fails when the image becomes invertible") {
    RingPtr a = PolyRing::make({"U"});
    RingPtr b = PolyRing::make({"U", "X"});
    Ideal rel(b, {parse_poly("U*X-1", b)});
    RingMap map(PresentedRing::plain(a), PresentedRing::make_quotient(b, rel),
                {parse_poly("U", b)});
    ContractionCheck check =
        contraction_property_check(map, Ideal(a, {parse_poly("U", a)}));
    CHECK_FALSE(check.holds);
    REQUIRE(check.witness.has_value());
    CHECK(*check.witness == parse_poly("1", a));
  }
  SUBCASE("zero ideal under an injective map") {
    ContractionCheck check =
        contraction_property_check(fx.phi, Ideal::zero(fx.A));
    CHECK(check.holds);
  }
}

TEST_CASE("contraction is monotone and dominates the identity") {
  GradedFixture fx;
  std::vector<Ideal> targets{fx.ib({"Z"}), fx.ib({"X", "Y"}),
                             fx.ib({"X*Z", "Y*Z"}), fx.ib({"X", "Y^2*Z-1"}),
                             fx.ib({"X"})};
  for (const auto& j1 : targets)
    for (const auto& j2 : targets) {
      if (!ideal_contains(j2, j1)) continue;  // j1 ⊆ j2
      CHECK(ideal_contains(contract_ideal(fx.phi, j2),
                           contract_ideal(fx.phi, j1)));
    }
}

TEST_CASE("graph elimination agrees with direct membership of images") {
  GradedFixture fx;
  std::mt19937_64 rng(99001);
  std::vector<Ideal> targets{fx.ib({"Z"}), fx.ib({"X", "Y^2*Z-1"}),
                             fx.ib({"X*Z", "Y*Z"})};
  for (const auto& J : targets) {
    Ideal con = contract_ideal(fx.phi, J);
    for (int i = 0; i < 50; ++i) {
      Polynomial g = ct::random_poly(rng, fx.A, 3, 3);
      CHECK(membership(g, con) == membership(apply(fx.phi, g), J));
    }
  }
}

TEST_CASE("graded pieces: images of A are degree zero") {
  GradedFixture fx;
  Grading w{1, 1, -1};
  std::mt19937_64 rng(99002);
  for (int i = 0; i < 40; ++i) {
    Polynomial g = ct::random_poly(rng, fx.A, 3, 4, false);
    Polynomial img = apply(fx.phi, g);
    if (img.is_zero()) continue;
    auto deg = img.homogeneous_degree(w);
    REQUIRE(deg.has_value());
    CHECK(*deg == 0);
    // the degree-zero projection fixes the image (the splitting)
    CHECK(img.project_degree(0, w) == img);
  }
}

TEST_CASE("extension of degree-zero contractions shrinks back on fixtures") {
  GradedFixture fx;
  // For homogeneous J generated in degree 0: extend(contract(J)) ⊆ J.
  std::vector<Ideal> targets{fx.ib({"X*Z", "Y*Z"}), fx.ib({"X*Z"}),
                             fx.ib({"X*Z+Y*Z"})};
  for (const auto& J : targets) {
    Ideal back = extend_ideal(fx.phi, contract_ideal(fx.phi, J));
    CHECK(ideal_contains(J, back));
  }
}

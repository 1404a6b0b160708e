#pragma once

#include <optional>
#include <utility>

#include "chainlift/polynomial.hpp"

namespace chainlift {

enum class Irreducibility { Irreducible, Reducible, Undecided };

// One probe of the deliberately limited factorization patterns:
// monomial-times-polynomial splits, univariate factorization of degree <= 4
// over the rationals, bivariate quadratics (conic test), differences of
// squares and cubes in monomials, monomial-minus-constant binomials, and
// coprime pure-power binomials. Anything outside the family is Undecided,
// never a wrong answer.
struct FactorProbe {
  Irreducibility status = Irreducibility::Undecided;
  // A nontrivial split g = first * second when status is Reducible.
  std::optional<std::pair<Polynomial, Polynomial>> split;
};

FactorProbe probe_factor(const Polynomial& g);

inline std::optional<std::pair<Polynomial, Polynomial>> split_once(
    const Polynomial& g) {
  return probe_factor(g).split;
}

inline Irreducibility irreducibility(const Polynomial& g) {
  return probe_factor(g).status;
}

}  // namespace chainlift

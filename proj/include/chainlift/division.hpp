#pragma once

#include <vector>

#include "chainlift/polynomial.hpp"

namespace chainlift {

// f = sum(quotients[i] * divisors[i]) + remainder, exactly; no monomial of
// the remainder is divisible by any divisor's leading monomial.
struct DivisionResult {
  std::vector<Polynomial> quotients;
  Polynomial remainder;
};

// Deterministic multivariate division: at each step the largest reducible
// monomial of the running polynomial is reduced by the first divisor (in
// list order) whose leading monomial divides it. Errors:
// ZeroDivisorPolynomial, RingMismatch.
DivisionResult divide(const Polynomial& f,
                      const std::vector<Polynomial>& divisors,
                      const MonomialOrder& order);

}  // namespace chainlift

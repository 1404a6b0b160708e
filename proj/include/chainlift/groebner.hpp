#pragma once

#include <optional>
#include <vector>

#include "chainlift/division.hpp"
#include "chainlift/polynomial.hpp"

namespace chainlift {

// Reduced Groebner basis: monic elements, no monomial of any element
// divisible by another's leading monomial, sorted by ascending leading
// monomial. When cofactors are tracked, basis[i] = sum_j cofactors[i][j] *
// generators[j] exactly.
struct GroebnerBasis {
  RingPtr ring;
  MonomialOrder order;
  std::vector<Polynomial> basis;
  std::vector<Polynomial> generators;  // as supplied (zeros kept for indexing)
  std::optional<std::vector<std::vector<Polynomial>>> cofactors;

  bool has_cofactors() const { return cofactors.has_value(); }
  bool is_zero() const { return basis.empty(); }
  // 1 lies in the ideal.
  bool is_unit() const {
    return basis.size() == 1 && basis.front().is_constant() &&
           !basis.front().is_zero();
  }
};

// Buchberger's algorithm with fully pinned strategy: pending S-pairs are
// processed by minimal total degree of the pair lcm, ties by creation index;
// pairs with coprime leading monomials are skipped; reduction always picks
// the largest reducible monomial and the first matching reducer in list
// order. The result is the unique reduced basis for the order, so any
// permutation of the same generators produces an identical basis.
GroebnerBasis buchberger(RingPtr ring, const std::vector<Polynomial>& gens,
                         const MonomialOrder& order,
                         bool track_cofactors = false);

struct ExtendedReduction {
  Polynomial remainder;
  std::vector<Polynomial> combination;  // over the original generators
};

// f = sum_j combination[j] * gb.generators[j] + remainder, exactly; the
// remainder equals divide(f, gb.basis).remainder. MissingCofactors unless
// the basis tracked cofactors.
ExtendedReduction extended_reduce(const Polynomial& f,
                                  const GroebnerBasis& gb);

// Normal form of f modulo the basis.
Polynomial reduce(const Polynomial& f, const GroebnerBasis& gb);

}  // namespace chainlift

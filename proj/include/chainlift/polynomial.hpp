#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "chainlift/coeff.hpp"
#include "chainlift/monomial.hpp"
#include "chainlift/ring.hpp"

namespace chainlift {

// Exact multivariate polynomial: an association from monomials to nonzero
// coefficients in a fixed ring. Normalization is eager, so equality is
// structural; the zero polynomial is the empty association. Immutable in
// spirit: all operations return new values.
class Polynomial {
public:
  Polynomial() = default;  // detached zero; attach a ring before use

  static Polynomial zero(RingPtr ring);
  static Polynomial constant(RingPtr ring, const Coeff& c);
  static Polynomial constant(RingPtr ring, long c);
  static Polynomial term(RingPtr ring, Monomial m, const Coeff& c);
  static Polynomial variable(RingPtr ring, std::size_t var);

  const RingPtr& ring() const { return ring_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // The constant coefficient (zero when absent).
  Coeff constant_coeff() const;
  std::size_t term_count() const { return terms_.size(); }
  const std::map<Monomial, Coeff>& terms() const { return terms_; }
  long total_degree() const;  // -1 for the zero polynomial

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial scaled(const Coeff& c) const;
  Polynomial times_term(const Monomial& m, const Coeff& c) const;
  Polynomial pow(unsigned e) const;

  bool operator==(const Polynomial& o) const;
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  // Leading data under an order; ZeroPolynomial on the zero polynomial.
  std::pair<Monomial, Coeff> leading_term(const MonomialOrder& order) const;
  Monomial leading_monomial(const MonomialOrder& order) const;
  Coeff leading_coeff(const MonomialOrder& order) const;
  Polynomial monic(const MonomialOrder& order) const;

  // Weighted-degree (grading) operations.
  // Returns d when every monomial has weighted degree d, nullopt otherwise;
  // ZeroPolynomial on the zero polynomial.
  std::optional<long> homogeneous_degree(const Grading& w) const;
  // Sum of the terms of weighted degree d; linear, idempotent on
  // homogeneous input.
  Polynomial project_degree(long d, const Grading& w) const;
  std::vector<long> occurring_degrees(const Grading& w) const;

  // Canonical form: terms descending in grevlex, coefficients as reduced
  // fractions, explicit '*' and '^'. Parses back to an equal polynomial.
  std::string str() const;

  // True if the variable occurs in some term.
  bool uses_var(std::size_t var) const;

private:
  void insert_term(const Monomial& m, const Coeff& c);
  void check_ring(const Polynomial& o) const;

  RingPtr ring_;
  std::map<Monomial, Coeff> terms_;
};

std::string monomial_str(const Monomial& m, const PolyRing& ring);

}  // namespace chainlift

#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "chainlift/ring.hpp"

namespace chainlift {

// Dense exponent vector. Length always equals the owning ring's variable
// count; exponents are non-negative.
class Monomial {
public:
  Monomial() = default;
  explicit Monomial(std::vector<int> exps) : exps_(std::move(exps)) {}
  static Monomial unit(std::size_t nvars) {
    return Monomial(std::vector<int>(nvars, 0));
  }

  std::size_t size() const { return exps_.size(); }
  int operator[](std::size_t i) const { return exps_[i]; }
  const std::vector<int>& exps() const { return exps_; }

  bool is_unit() const;
  long total_degree() const;
  long weighted_degree(const Grading& w) const;  // ArityMismatch

  bool divides(const Monomial& other) const;
  bool coprime(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  // Precondition: other.divides(*this).
  Monomial operator/(const Monomial& other) const;
  static Monomial lcm(const Monomial& a, const Monomial& b);
  Monomial pow(unsigned e) const;

  // Structural (storage) order, not a monomial order.
  auto operator<=>(const Monomial&) const = default;

private:
  std::vector<int> exps_;
};

// Total multiplicative well-orders. Block orders split the variables at
// index `split`: the first block is compared first (so the order eliminates
// the first `split` variables), grevlex inside each block.
struct MonomialOrder {
  enum class Kind { lex, grlex, grevlex, block };

  Kind kind = Kind::grevlex;
  std::size_t split = 0;

  static MonomialOrder lex() { return {Kind::lex, 0}; }
  static MonomialOrder grlex() { return {Kind::grlex, 0}; }
  static MonomialOrder grevlex() { return {Kind::grevlex, 0}; }
  static MonomialOrder block(std::size_t k) { return {Kind::block, k}; }

  // Stable key for per-order caches, e.g. "grevlex", "block:2".
  std::string name() const;
  bool operator==(const MonomialOrder&) const = default;
};

// -1, 0, +1 as m1 <, =, > m2 under the order. ArityMismatch on unequal
// exponent-vector lengths.
int cmp_monomials(const MonomialOrder& order, const Monomial& m1,
                  const Monomial& m2);

}  // namespace chainlift

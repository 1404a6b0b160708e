#pragma once

#include <optional>
#include <string>
#include <vector>

#include "chainlift/factor.hpp"
#include "chainlift/ideal.hpp"

namespace chainlift {

// A pair f, g with f*g in the ideal but neither factor in it.
struct ProductWitness {
  Polynomial f, g;
};

// Primality bookkeeping. VerifiedPrime only comes from the recognized
// patterns: the zero ideal, an ideal generated by variables, or variables
// plus one polynomial whose irreducibility the limited factorizer decides.
// Disproved carries a checkable witness: a product pair, or reason
// "unit ideal" (check: 1 lies in the ideal).
struct PrimalityStatus {
  enum class Kind { VerifiedPrime, Disproved, Assumed, Unknown };

  Kind kind = Kind::Unknown;
  std::string reason;
  std::optional<ProductWitness> witness;

  bool verified() const { return kind == Kind::VerifiedPrime; }
  bool disproved() const { return kind == Kind::Disproved; }
  std::string kind_name() const;
};

PrimalityStatus primality_status(const Ideal& I);

struct MinimalPrimesResult {
  std::vector<Ideal> primes;  // each VerifiedPrime and containing I
  bool complete = false;
  std::vector<Ideal> unsplit;  // leaves the splitter could not resolve
};

// Exact for monomial ideals (minimal primes = minimal variable covers of the
// generator supports). Otherwise splits recursively along factors found by
// the limited factorizer, into (I : f^∞) and I + (f); leaves that verify as
// prime are returned, anything else makes the result incomplete.
MinimalPrimesResult minimal_primes_structured(const Ideal& I);

}  // namespace chainlift

#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "chainlift/groebner.hpp"

namespace chainlift {

// An ideal of a polynomial ring: a finite generator list (zeros dropped)
// plus a monotonic cache of reduced Groebner bases keyed by monomial order.
// The cache is write-once per key and safe for concurrent readers; the
// generator list never changes after construction.
class Ideal {
public:
  Ideal() = default;
  Ideal(RingPtr ring, std::vector<Polynomial> gens);
  static Ideal zero(RingPtr ring) { return Ideal(std::move(ring), {}); }

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& gens() const { return gens_; }
  bool is_zero_ideal() const { return gens_.empty(); }
  bool is_unit() const { return groebner().is_unit(); }

  const GroebnerBasis& groebner(const MonomialOrder& order = MonomialOrder::grevlex(),
                                bool cofactors = false) const;
  // Reduced grevlex basis: the canonical generator list.
  const std::vector<Polynomial>& canonical_gens() const;
  // "(g1,g2,...)" over the canonical generators; "(0)" for the zero ideal.
  std::string str() const;

private:
  struct Cache {
    std::mutex mu;
    std::map<std::string, std::shared_ptr<const GroebnerBasis>> bases;
  };

  RingPtr ring_;
  std::vector<Polynomial> gens_;
  std::shared_ptr<Cache> cache_;
};

// Membership via normal form against the reduced grevlex basis.
bool membership(const Polynomial& f, const Ideal& I);
// f as a combination of I's stored generators, when f lies in I.
std::optional<std::vector<Polynomial>> membership_combination(
    const Polynomial& f, const Ideal& I);
// Every generator of J lies in I.
bool ideal_contains(const Ideal& I, const Ideal& J);
// Identical reduced grevlex bases.
bool ideal_equal(const Ideal& I, const Ideal& J);

Ideal add(const Ideal& I, const Ideal& J);
Ideal add(const Ideal& I, const Polynomial& f);

// I ∩ J, by eliminating t from t*I + (1-t)*J.
Ideal intersect(const Ideal& I, const Ideal& J);
// (I : f) = {g : g*f ∈ I}. ZeroElement on zero f.
Ideal quotient(const Ideal& I, const Polynomial& f);
// (I : f^∞), by eliminating t from I + (1 - t*f). ZeroElement on zero f.
Ideal saturate(const Ideal& I, const Polynomial& f);
// I ∩ K[x_{k+1},...,x_n] as an ideal of the suffix ring (block order on the
// first k variables). When `into` is given it must be compatible with the
// suffix ring and is used as the result's ring.
Ideal eliminate(const Ideal& I, std::size_t k, RingPtr into = nullptr);
// f ∈ rad(I), by the Rabinowitsch trick: 1 ∈ I + (1 - t*f).
bool radical_membership(const Polynomial& f, const Ideal& I);

// Ring-extension plumbing shared by the elimination-based operations.
// Fresh internal names are prefixed with '#', which the parser can never
// produce.
RingPtr prepend_vars(const RingPtr& ring, std::size_t count,
                     const std::string& stem = "#t");
// Embed f in `big`, its variables occupying positions [offset, offset+n).
Polynomial lift_at(const Polynomial& f, const RingPtr& big,
                   std::size_t offset);
// Inverse of lift_at for polynomials not using the first k variables.
Polynomial drop_prefix(const Polynomial& f, const RingPtr& small,
                       std::size_t k);

}  // namespace chainlift

#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "chainlift/ideal.hpp"

namespace chainlift {

// Finitely generated multiplicative monoid: all finite products of the
// generators, including the empty product 1. Zero is never a generator.
class MultiplicativeSetFG {
public:
  MultiplicativeSetFG(RingPtr ring, std::vector<Polynomial> gens);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& gens() const { return gens_; }
  // Product of gens[i]^exps[i]; ArityMismatch unless one exponent per
  // generator.
  Polynomial product(const std::vector<unsigned>& exps) const;

private:
  RingPtr ring_;
  std::vector<Polynomial> gens_;
};

// The ladder data: ideals a_0..a_r and multiplicative sets F_0..F_r in one
// ring. It determines the descending family of sets
//   S_{r+1} = {1},   S_i = { s : (s, a_i) ∩ F_i·S_{i+1} ≠ ∅ },
// whose key property is that 0 ∉ S_0 exactly when some prime chain
// q_0 ⊆ ... ⊆ q_r has a_i ⊆ q_i and q_i ∩ F_i = ∅.
struct LadderSpec {
  RingPtr ring;
  std::vector<Ideal> ideals;
  std::vector<MultiplicativeSetFG> msets;

  LadderSpec(RingPtr ring, std::vector<Ideal> ideals,
             std::vector<MultiplicativeSetFG> msets);
  std::size_t r() const { return ideals.size() - 1; }
};

// One chosen element f_i per level, recorded as exponents over the level's
// multiplicative-set generators.
using PickVector = std::vector<std::vector<unsigned>>;

struct TelescopedGens {
  std::vector<Polynomial> picks;     // f_i
  std::vector<Polynomial> prefixes;  // f_{i-1}···f_0 (1 for level 0)
  // prefix_i * g for each generator g of a_i, level-major.
  std::vector<std::vector<Polynomial>> gens;
  std::vector<Polynomial> flat() const;
};

TelescopedGens telescoped_generators(const LadderSpec& ladder,
                                     const PickVector& picks);

// The ideal a_0 + f_0·a_1 + f_1f_0·a_2 + ... + f_{r-1}···f_0·a_r.
Ideal telescoped_ideal(const LadderSpec& ladder, const PickVector& picks);

// Machine-checkable witness that 0 ∈ S_0: chosen f_i together with
// coefficients c_{i,j} satisfying
//   f_r···f_0 = Σ_i Σ_j c_{i,j} · (f_{i-1}···f_0) · gen_j(a_i)
// exactly. Replaying the identity needs nothing but polynomial arithmetic.
struct ObstructionCertificate {
  LadderSpec ladder;
  PickVector picks;
  std::vector<std::vector<Polynomial>> coefficients;  // [level][generator]
};

struct CertificateCheck {
  bool ok;
  Polynomial difference;  // LHS - RHS when the identity fails
};

CertificateCheck verify_certificate(const ObstructionCertificate& cert);

struct ObstructionResult {
  bool obstructed = false;
  unsigned bound = 0;
  std::optional<ObstructionCertificate> certificate;
  std::string verdict() const {
    return obstructed ? "Obstructed"
                      : "NoObstructionUpToBound(" + std::to_string(bound) + ")";
  }
};

// Decides 0 ∈ S_0 for the finitely generated ladder, relative to the
// exponent bound: picks are enumerated with every exponent ≤ bound, by
// increasing total degree then lexicographically (level-major), and each
// product f_r···f_0 is tested for membership in the telescoped ideal with
// cofactor tracking. A hit is definitive (the certificate replays by
// arithmetic); exhaustion is only exhaustive relative to the bound.
//
// Correctness of the membership reformulation: if 0 ∈ S_0 then unrolling the
// defining equations b_i·s_i + a_i = f_i·s_{i+1} and multiplying through by
// the f-prefixes yields exactly the telescoped membership. Conversely, a
// telescoped identity f_r···f_0 = Σ A_i·prefix_i with A_i ∈ a_i certifies
// 0 ∈ S_0: the tails s_i = f_r···f_i − Σ_{j≥i} A_j·(f_i···f_{j-1}) satisfy
// 1·s_i + A_i = f_i·s_{i+1} and s_{r+1} = 1, so s_i ∈ S_i descending, and
// A_0 = f_0·s_1 puts 0 in S_0.
ObstructionResult obstruction_search(const LadderSpec& ladder, unsigned bound);

// Byte-reproducible certificate files (stable field order, canonical
// polynomial strings, FNV-1a content hash).
nlohmann::ordered_json certificate_to_json(const ObstructionCertificate& cert);
ObstructionCertificate certificate_from_json(const nlohmann::ordered_json& j);
std::string certificate_identity_hash(const ObstructionCertificate& cert);
void write_certificate_file(const std::string& path,
                            const ObstructionCertificate& cert);
// Error (SyntaxError/ResolutionError) on malformed files; IdentityFails is
// reported by verify_certificate, not here.
ObstructionCertificate read_certificate_file(const std::string& path);

}  // namespace chainlift

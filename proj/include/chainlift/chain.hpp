#pragma once

#include <optional>
#include <string>
#include <vector>

#include "chainlift/ladder.hpp"
#include "chainlift/primes.hpp"
#include "chainlift/ringmap.hpp"

namespace chainlift {

struct ChainLevel {
  Ideal ideal;
  PrimalityStatus status;
};

// A strictly ascending chain of ideals carrying primality bookkeeping.
// Construction rejects Disproved levels and non-strict containments; Unknown
// levels become Assumed when allowed, otherwise they are rejected too.
class PrimeChain {
public:
  static PrimeChain make(PresentedRing ring, std::vector<Ideal> levels,
                         bool assume_unknown = true);

  const PresentedRing& ring() const { return ring_; }
  const std::vector<ChainLevel>& levels() const { return levels_; }
  std::size_t length() const { return levels_.size() - 1; }  // r
  std::vector<Ideal> ideals() const;

private:
  PrimeChain() = default;
  PresentedRing ring_{nullptr, Ideal()};
  std::vector<ChainLevel> levels_;
};

struct ChainCheckEntry {
  std::size_t level;
  std::string check;  // containment/strictness/unit/extension/contraction/primality
  bool ok;
  std::string detail;
};

struct ChainReport {
  bool ok = false;  // containment, strictness, unit, extension, contraction
  std::optional<std::string> failure;  // first failing check's kind
  std::vector<ChainCheckEntry> entries;
};

// Checks a proposed lift q_0 ⊆ ... ⊆ q_r of p_0 ⊂ ... ⊂ p_r: per level,
// ascending strict containment, q_i proper, p_iB ⊆ q_i, and
// φ⁻¹(q_i) = p_i; primality statuses are reported but do not gate.
// LengthMismatch when the chains have different lengths.
ChainReport verify_chain(const RingMap& map, const PrimeChain& source,
                         const std::vector<Ideal>& target_levels);
ChainReport verify_chain(const RingMap& map, const PrimeChain& source,
                         const PrimeChain& target);

// Lemma-style extendability of a start prime: may q0 (lying over p_0) be
// extended to a full chain over the source chain? Builds the ladder
// a_0 = q0, a_i = q0 + p_iB with the witness multiplicative sets and runs
// the obstruction search. Witnesses are source polynomials outside p_i;
// empty per-level lists use the defaults (all source variables outside p_i,
// else the constant 1). WitnessNotOutside when a witness lies in p_i.
ObstructionResult extendability_test(
    const RingMap& map, const Ideal& q0, const PrimeChain& source,
    const std::vector<std::vector<Polynomial>>& witnesses, unsigned bound);

// The level candidate pool lift_chain draws from: minimal primes of
// (previous + p_iB) saturated by each witness image (and by 1), plus hints;
// sorted by generator count then printed form. `survivors` keeps those with
// φ⁻¹(q) = p_i (the fiber condition) and the containment/disjointness
// prefilters; `rejected` records the others with the reason.
struct LevelPool {
  std::vector<Ideal> survivors;
  std::vector<std::pair<Ideal, std::string>> rejected;
};
LevelPool lift_candidates(const RingMap& map, const std::optional<Ideal>& prev,
                          const Ideal& p_i, const std::vector<Ideal>& hints,
                          unsigned bound);

struct ContractionTranscript {
  std::size_t level;
  std::vector<std::string> contracted_basis;  // reduced basis of φ⁻¹(q_i)
  std::vector<std::string> source_basis;      // reduced basis of p_i
};

struct LiftResult {
  PrimeChain source;
  PrimeChain target;
  std::vector<ContractionTranscript> transcripts;
  ChainReport verification;
};

struct LiftOutcome {
  std::optional<LiftResult> result;
  // surviving candidates per level across the explored branches
  std::vector<std::vector<std::string>> level_candidates;
  bool found() const { return result.has_value(); }
};

// Depth-first constructive search for a chain in the target lying over the
// source chain, guided by the fiber description: q lies over p exactly when
// pB ⊆ q and q misses φ(source outside p). NotFound is bounded evidence,
// never a nonexistence proof.
LiftOutcome lift_chain(const RingMap& map, const PrimeChain& source,
                       const std::vector<Ideal>& pool_hint, unsigned bound);

struct ChainLengthReport {
  std::size_t source_length;
  std::size_t target_length;
};

// Both lengths equal r: a lifted chain witnesses that the target admits
// chains at least as long as the source.
ChainLengthReport chain_length_report(const LiftResult& lift);

}  // namespace chainlift

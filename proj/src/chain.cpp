#include "chainlift/chain.hpp"

#include <algorithm>

#include "chainlift/error.hpp"

namespace chainlift {

PrimeChain PrimeChain::make(PresentedRing ring, std::vector<Ideal> levels,
                            bool assume_unknown) {
  if (levels.empty())
    fail(ErrorKind::InvalidArgument, "a chain needs at least one level");
  PrimeChain chain;
  chain.ring_ = std::move(ring);
  for (std::size_t i = 0; i < levels.size(); ++i) {
    require_same_ring(chain.ring_.ambient, levels[i].ring());
    PrimalityStatus st = primality_status(levels[i]);
    if (st.disproved())
      fail(ErrorKind::InvalidArgument,
           "level " + std::to_string(i) + " is not prime: " + st.reason);
    if (st.kind == PrimalityStatus::Kind::Unknown) {
      if (!assume_unknown)
        fail(ErrorKind::InvalidArgument,
             "level " + std::to_string(i) + " has unknown primality");
      st.kind = PrimalityStatus::Kind::Assumed;
      st.reason = "assumed prime (outside the decidable patterns)";
    }
    if (i > 0) {
      const Ideal& prev = chain.levels_[i - 1].ideal;
      for (const auto& g : prev.gens()) {
        if (!membership(g, levels[i]))
          fail(ErrorKind::InvalidArgument,
               "chain not ascending at level " + std::to_string(i) +
                   ": generator " + g.str() + " missing");
      }
      if (ideal_equal(prev, levels[i]))
        fail(ErrorKind::InvalidArgument,
             "chain not strict at level " + std::to_string(i));
    }
    chain.levels_.push_back(ChainLevel{std::move(levels[i]), std::move(st)});
  }
  return chain;
}

std::vector<Ideal> PrimeChain::ideals() const {
  std::vector<Ideal> out;
  for (const auto& l : levels_) out.push_back(l.ideal);
  return out;
}

namespace {

Ideal with_relations(const Ideal& I, const PresentedRing& ring) {
  if (ring.relations.is_zero_ideal()) return I;
  return add(I, ring.relations);
}

}  // namespace

ChainReport verify_chain(const RingMap& map, const PrimeChain& source,
                         const std::vector<Ideal>& target_levels) {
  if (source.levels().size() != target_levels.size())
    fail(ErrorKind::LengthMismatch,
         "source chain has " + std::to_string(source.levels().size()) +
             " levels, target has " + std::to_string(target_levels.size()));

  ChainReport report;
  report.ok = true;
  auto note = [&](std::size_t level, const std::string& check, bool ok,
                  const std::string& detail, const char* failure_kind) {
    report.entries.push_back(ChainCheckEntry{level, check, ok, detail});
    if (!ok && check != "primality") {
      report.ok = false;
      if (!report.failure) report.failure = failure_kind;
    }
  };

  for (std::size_t i = 0; i < target_levels.size(); ++i) {
    const Ideal& q = target_levels[i];
    require_same_ring(q.ring(), map.target().ambient);
    const Ideal& p = source.levels()[i].ideal;
    Ideal q_full = with_relations(q, map.target());

    if (i > 0) {
      const Ideal& prev = target_levels[i - 1];
      bool contained = true;
      std::string detail;
      for (const auto& g : prev.gens()) {
        if (!membership(g, q_full)) {
          contained = false;
          detail = "generator " + g.str() + " of level " +
                   std::to_string(i - 1) + " is missing";
          break;
        }
      }
      note(i, "containment", contained, detail, "ContainmentFailure");
      if (contained) {
        bool strict = !ideal_equal(with_relations(prev, map.target()), q_full);
        note(i, "strictness", strict,
             strict ? "" : "levels " + std::to_string(i - 1) + " and " +
                               std::to_string(i) + " are equal",
             "NotStrict");
      }
    }

    bool proper = !q_full.is_unit();
    note(i, "unit", proper, proper ? "" : "level is the unit ideal",
         "UnitIdeal");

    bool extended = true;
    std::string ext_detail;
    for (const auto& g : p.gens()) {
      Polynomial img = apply(map, g);
      if (!membership(img, q_full)) {
        extended = false;
        ext_detail = "image " + img.str() + " of " + g.str() + " is missing";
        break;
      }
    }
    note(i, "extension", extended, ext_detail, "ExtensionFailure");

    Ideal contracted = contract_ideal(map, q);
    Ideal expected = with_relations(p, map.source());
    bool matches = ideal_equal(contracted, expected);
    note(i, "contraction", matches,
         matches ? "" : "contracts to " + contracted.str() + ", expected " +
                            expected.str(),
         "ContractionMismatch");

    PrimalityStatus st = primality_status(q_full);
    bool prime_ok = st.kind == PrimalityStatus::Kind::VerifiedPrime ||
                    st.kind == PrimalityStatus::Kind::Assumed ||
                    st.kind == PrimalityStatus::Kind::Unknown;
    note(i, "primality", prime_ok, st.kind_name() + ": " + st.reason,
         "NotPrime");
  }
  return report;
}

ChainReport verify_chain(const RingMap& map, const PrimeChain& source,
                         const PrimeChain& target) {
  return verify_chain(map, source, target.ideals());
}

namespace {

std::vector<Polynomial> default_witnesses(const RingMap& map, const Ideal& p) {
  std::vector<Polynomial> out;
  const RingPtr& src = map.source().ambient;
  for (std::size_t i = 0; i < src->nvars(); ++i) {
    Polynomial v = Polynomial::variable(src, i);
    if (!membership(v, p)) out.push_back(v);
  }
  if (out.empty()) out.push_back(Polynomial::constant(src, 1));
  return out;
}

}  // namespace

ObstructionResult extendability_test(
    const RingMap& map, const Ideal& q0, const PrimeChain& source,
    const std::vector<std::vector<Polynomial>>& witnesses, unsigned bound) {
  const std::size_t nlevels = source.levels().size();
  if (!witnesses.empty() && witnesses.size() != nlevels)
    fail(ErrorKind::LengthMismatch, "one witness list per chain level");
  require_same_ring(q0.ring(), map.target().ambient);

  std::vector<Ideal> ideals;
  std::vector<MultiplicativeSetFG> msets;
  for (std::size_t i = 0; i < nlevels; ++i) {
    const Ideal& p = source.levels()[i].ideal;
    if (i == 0) {
      ideals.push_back(add(q0, map.target().relations));
    } else {
      ideals.push_back(add(q0, extend_ideal(map, p)));
    }
    std::vector<Polynomial> level_witnesses =
        (witnesses.empty() || witnesses[i].empty()) ? default_witnesses(map, p)
                                                    : witnesses[i];
    std::vector<Polynomial> images;
    for (const auto& w : level_witnesses) {
      if (membership(w, with_relations(p, map.source())))
        fail(ErrorKind::WitnessNotOutside,
             "witness " + w.str() + " lies in the level-" + std::to_string(i) +
                 " prime");
      images.push_back(apply(map, w));
    }
    msets.emplace_back(map.target().ambient, std::move(images));
  }
  LadderSpec ladder(map.target().ambient, std::move(ideals), std::move(msets));
  return obstruction_search(ladder, bound);
}

LevelPool lift_candidates(const RingMap& map, const std::optional<Ideal>& prev,
                          const Ideal& p_i, const std::vector<Ideal>& hints,
                          unsigned bound) {
  Ideal base = extend_ideal(map, p_i);
  if (prev) base = add(*prev, base);

  std::vector<Polynomial> witnesses = default_witnesses(map, p_i);
  std::vector<Polynomial> witness_images;
  for (const auto& w : witnesses) witness_images.push_back(apply(map, w));

  std::vector<Ideal> pool;
  auto add_candidate = [&](const Ideal& c) {
    for (const auto& existing : pool)
      if (ideal_equal(existing, c)) return;
    pool.push_back(c);
  };

  MinimalPrimesResult direct = minimal_primes_structured(base);
  for (const auto& c : direct.primes) add_candidate(c);
  for (const auto& img : witness_images) {
    if (img.is_zero() || img.is_constant()) continue;
    MinimalPrimesResult sat_primes =
        minimal_primes_structured(saturate(base, img));
    for (const auto& c : sat_primes.primes) add_candidate(c);
  }
  for (const auto& h : hints) add_candidate(h);

  std::sort(pool.begin(), pool.end(), [](const Ideal& a, const Ideal& b) {
    if (a.canonical_gens().size() != b.canonical_gens().size())
      return a.canonical_gens().size() < b.canonical_gens().size();
    return a.str() < b.str();
  });

  Ideal expected = with_relations(p_i, map.source());
  LevelPool out;
  for (const auto& q : pool) {
    if (q.is_unit()) {
      out.rejected.emplace_back(q, "unit ideal");
      continue;
    }
    if (prev) {
      bool contains_prev = true;
      for (const auto& g : prev->gens())
        if (!membership(g, q)) {
          contains_prev = false;
          break;
        }
      if (!contains_prev) {
        out.rejected.emplace_back(q, "does not contain the previous level");
        continue;
      }
      if (ideal_equal(*prev, q)) {
        out.rejected.emplace_back(q, "equal to the previous level");
        continue;
      }
    }
    // Disjointness from the witness monoid, up to the exponent bound.
    bool disjoint = true;
    std::vector<unsigned> exps(witness_images.size(), 0);
    std::function<bool(std::size_t, unsigned)> any_product_inside =
        [&](std::size_t at, unsigned budget) -> bool {
      if (at == exps.size()) {
        MultiplicativeSetFG F(map.target().ambient, witness_images);
        Polynomial prod = F.product(exps);
        return !prod.is_constant() && membership(prod, q);
      }
      for (unsigned e = 0; e <= budget; ++e) {
        exps[at] = e;
        if (any_product_inside(at + 1, budget - e)) return true;
      }
      exps[at] = 0;
      return false;
    };
    if (any_product_inside(0, bound)) disjoint = false;
    if (!disjoint) {
      out.rejected.emplace_back(q, "meets the witness multiplicative set");
      continue;
    }
    Ideal contracted = contract_ideal(map, q);
    if (!ideal_equal(contracted, expected)) {
      out.rejected.emplace_back(q, "contracts to " + contracted.str() +
                                       ", not " + expected.str());
      continue;
    }
    out.survivors.push_back(q);
  }
  return out;
}

namespace {

bool lift_rec(const RingMap& map, const PrimeChain& source, std::size_t level,
              std::vector<Ideal>& chosen, const std::vector<Ideal>& hints,
              unsigned bound, LiftOutcome& out) {
  if (level == source.levels().size()) return true;
  std::optional<Ideal> prev;
  if (level > 0) prev = chosen.back();
  LevelPool pool = lift_candidates(map, prev, source.levels()[level].ideal,
                                   hints, bound);
  for (const auto& q : pool.survivors) {
    std::string printed = q.str();
    auto& seen = out.level_candidates[level];
    if (std::find(seen.begin(), seen.end(), printed) == seen.end())
      seen.push_back(printed);
  }
  for (const auto& q : pool.survivors) {
    chosen.push_back(q);
    if (lift_rec(map, source, level + 1, chosen, hints, bound, out))
      return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace

LiftOutcome lift_chain(const RingMap& map, const PrimeChain& source,
                       const std::vector<Ideal>& pool_hint, unsigned bound) {
  LiftOutcome out;
  out.level_candidates.assign(source.levels().size(), {});
  std::vector<Ideal> chosen;
  if (!lift_rec(map, source, 0, chosen, pool_hint, bound, out)) return out;

  ChainReport report = verify_chain(map, source, chosen);
  if (!report.ok)
    throw std::logic_error("lift_chain produced a chain that fails verification");

  LiftResult result{source, PrimeChain::make(map.target(), chosen), {}, report};
  for (std::size_t i = 0; i < chosen.size(); ++i) {
    ContractionTranscript t;
    t.level = i;
    for (const auto& g : contract_ideal(map, chosen[i]).canonical_gens())
      t.contracted_basis.push_back(g.str());
    for (const auto& g :
         with_relations(source.levels()[i].ideal, map.source()).canonical_gens())
      t.source_basis.push_back(g.str());
    result.transcripts.push_back(std::move(t));
  }
  out.result = std::move(result);
  return out;
}

ChainLengthReport chain_length_report(const LiftResult& lift) {
  if (!lift.verification.ok)
    fail(ErrorKind::InvalidArgument, "lift result failed verification");
  return ChainLengthReport{lift.source.length(), lift.target.length()};
}

}  // namespace chainlift

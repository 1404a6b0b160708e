#include "chainlift/primes.hpp"

#include <algorithm>
#include <set>

#include "chainlift/error.hpp"

namespace chainlift {

std::string PrimalityStatus::kind_name() const {
  switch (kind) {
    case Kind::VerifiedPrime: return "VerifiedPrime";
    case Kind::Disproved: return "Disproved";
    case Kind::Assumed: return "Assumed";
    case Kind::Unknown: return "Unknown";
  }
  return "?";
}

namespace {

bool is_single_variable(const Polynomial& p, std::size_t& var) {
  if (p.term_count() != 1) return false;
  const auto& [m, c] = *p.terms().begin();
  if (m.total_degree() != 1) return false;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 1) {
      var = i;
      return true;
    }
  }
  return false;
}

std::optional<PrimalityStatus> disprove_by_factors(const Ideal& I) {
  for (const auto& g : I.canonical_gens()) {
    auto split = split_once(g);
    if (!split) continue;
    if (membership(split->first, I) || membership(split->second, I)) continue;
    PrimalityStatus st;
    st.kind = PrimalityStatus::Kind::Disproved;
    st.reason = "product witness " + split->first.str() + " * " +
                split->second.str() + " = " + g.str();
    st.witness = ProductWitness{split->first, split->second};
    return st;
  }
  return std::nullopt;
}

}  // namespace

PrimalityStatus primality_status(const Ideal& I) {
  PrimalityStatus st;
  const auto& basis = I.canonical_gens();
  if (basis.empty()) {
    st.kind = PrimalityStatus::Kind::VerifiedPrime;
    st.reason = "zero ideal of a polynomial ring over a field";
    return st;
  }
  if (I.is_unit()) {
    st.kind = PrimalityStatus::Kind::Disproved;
    st.reason = "unit ideal";
    return st;
  }

  std::vector<const Polynomial*> rest;
  for (const auto& b : basis) {
    std::size_t var = 0;
    if (!is_single_variable(b, var)) rest.push_back(&b);
  }

  if (rest.empty()) {
    st.kind = PrimalityStatus::Kind::VerifiedPrime;
    st.reason = "generated by variables";
    return st;
  }

  if (rest.size() == 1) {
    // Basis is variables plus one reduced polynomial g; g uses none of the
    // basis variables, so the quotient is K[remaining]/(g).
    const Polynomial& g = *rest.front();
    switch (irreducibility(g)) {
      case Irreducibility::Irreducible:
        st.kind = PrimalityStatus::Kind::VerifiedPrime;
        st.reason = "variables plus the irreducible polynomial " + g.str();
        return st;
      case Irreducibility::Reducible:
        if (auto d = disprove_by_factors(I)) return *d;
        break;
      case Irreducibility::Undecided:
        break;
    }
    st.kind = PrimalityStatus::Kind::Unknown;
    st.reason = "outside the decidable pattern family";
    return st;
  }

  if (auto d = disprove_by_factors(I)) return *d;
  st.kind = PrimalityStatus::Kind::Unknown;
  st.reason = "outside the decidable pattern family";
  return st;
}

namespace {

// Minimal variable covers of the supports of a monomial generating set.
std::vector<Ideal> monomial_minimal_primes(const Ideal& I) {
  const auto& basis = I.canonical_gens();
  std::vector<std::vector<std::size_t>> supports;
  std::set<std::size_t> universe_set;
  for (const auto& b : basis) {
    const Monomial& m = b.terms().begin()->first;
    std::vector<std::size_t> sup;
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i] > 0) {
        sup.push_back(i);
        universe_set.insert(i);
      }
    supports.push_back(std::move(sup));
  }
  std::vector<std::size_t> universe(universe_set.begin(), universe_set.end());
  const std::size_t n = universe.size();

  std::vector<unsigned long> masks_by_size;
  for (unsigned long mask = 0; mask < (1ul << n); ++mask)
    masks_by_size.push_back(mask);
  std::sort(masks_by_size.begin(), masks_by_size.end(),
            [](unsigned long a, unsigned long b) {
              int pa = __builtin_popcountl(a), pb = __builtin_popcountl(b);
              if (pa != pb) return pa < pb;
              return a < b;
            });

  auto covers = [&](unsigned long mask) {
    for (const auto& sup : supports) {
      bool hit = false;
      for (std::size_t v : sup) {
        std::size_t pos = static_cast<std::size_t>(
            std::lower_bound(universe.begin(), universe.end(), v) -
            universe.begin());
        if (mask & (1ul << pos)) {
          hit = true;
          break;
        }
      }
      if (!hit) return false;
    }
    return true;
  };

  std::vector<unsigned long> kept;
  for (unsigned long mask : masks_by_size) {
    if (!covers(mask)) continue;
    bool redundant = false;
    for (unsigned long k : kept) {
      if ((k & mask) == k) {
        redundant = true;
        break;
      }
    }
    if (!redundant) kept.push_back(mask);
  }

  std::vector<Ideal> primes;
  for (unsigned long mask : kept) {
    std::vector<Polynomial> gens;
    for (std::size_t pos = 0; pos < n; ++pos)
      if (mask & (1ul << pos))
        gens.push_back(Polynomial::variable(I.ring(), universe[pos]));
    primes.emplace_back(I.ring(), std::move(gens));
  }
  return primes;
}

bool is_monomial_ideal(const Ideal& I) {
  const auto& basis = I.canonical_gens();
  return !basis.empty() &&
         std::all_of(basis.begin(), basis.end(),
                     [](const Polynomial& b) { return b.term_count() == 1; });
}

void minimal_primes_rec(const Ideal& I, int depth, MinimalPrimesResult& out) {
  if (I.canonical_gens().empty()) {
    out.primes.push_back(Ideal::zero(I.ring()));
    return;
  }
  if (I.is_unit()) return;
  if (is_monomial_ideal(I)) {
    for (auto& p : monomial_minimal_primes(I)) out.primes.push_back(std::move(p));
    return;
  }
  if (depth <= 0) {
    out.complete = false;
    out.unsplit.push_back(I);
    return;
  }
  for (const auto& g : I.canonical_gens()) {
    auto split = split_once(g);
    if (!split) continue;
    minimal_primes_rec(saturate(I, split->first), depth - 1, out);
    minimal_primes_rec(add(I, split->first), depth - 1, out);
    return;
  }
  PrimalityStatus st = primality_status(I);
  if (st.verified()) {
    out.primes.push_back(I);
    return;
  }
  out.complete = false;
  out.unsplit.push_back(I);
}

}  // namespace

MinimalPrimesResult minimal_primes_structured(const Ideal& I) {
  MinimalPrimesResult out;
  out.complete = true;
  minimal_primes_rec(I, 24, out);

  // Dedupe, then drop anything containing a smaller member.
  std::vector<Ideal> unique;
  for (const auto& p : out.primes) {
    bool dup = false;
    for (const auto& q : unique)
      if (ideal_equal(p, q)) {
        dup = true;
        break;
      }
    if (!dup) unique.push_back(p);
  }
  std::vector<Ideal> minimal;
  for (const auto& p : unique) {
    bool has_smaller = false;
    for (const auto& q : unique) {
      if (&p == &q) continue;
      if (ideal_contains(p, q) && !ideal_equal(p, q)) {
        has_smaller = true;
        break;
      }
    }
    if (!has_smaller) minimal.push_back(p);
  }
  std::sort(minimal.begin(), minimal.end(), [](const Ideal& a, const Ideal& b) {
    if (a.canonical_gens().size() != b.canonical_gens().size())
      return a.canonical_gens().size() < b.canonical_gens().size();
    return a.str() < b.str();
  });
  out.primes = std::move(minimal);
  return out;
}

}  // namespace chainlift

#include "chainlift/groebner.hpp"

#include <algorithm>
#include <limits>

#include "chainlift/error.hpp"

namespace chainlift {

namespace {

struct WorkElem {
  Polynomial poly;
  Monomial lm;
  Coeff lc;
  std::vector<Polynomial> cof;  // over the original generators
};

struct Pair {
  std::size_t i, j;
  long lcm_degree;
  std::size_t created;
};

// Fully reduces p against items (list order, largest reducible monomial
// first), tracking the cofactor row when requested.
void reduce_tracked(Polynomial& p, std::vector<Polynomial>* cof,
                    const std::vector<WorkElem>& items,
                    const MonomialOrder& order) {
  while (!p.is_zero()) {
    const Monomial* best = nullptr;
    const Coeff* best_c = nullptr;
    std::size_t best_item = 0;
    for (const auto& [m, c] : p.terms()) {
      if (best && cmp_monomials(order, m, *best) <= 0) continue;
      for (std::size_t j = 0; j < items.size(); ++j) {
        if (items[j].lm.divides(m)) {
          best = &m;
          best_c = &c;
          best_item = j;
          break;
        }
      }
    }
    if (!best) return;
    Monomial q = *best / items[best_item].lm;
    Coeff c = *best_c / items[best_item].lc;
    p = p - items[best_item].poly.times_term(q, c);
    if (cof) {
      for (std::size_t g = 0; g < cof->size(); ++g) {
        const Polynomial& ig = items[best_item].cof[g];
        if (!ig.is_zero()) (*cof)[g] = (*cof)[g] - ig.times_term(q, c);
      }
    }
  }
}

void make_monic(WorkElem& e, const MonomialOrder& order, bool track) {
  auto [lm, lc] = e.poly.leading_term(order);
  e.lm = lm;
  e.lc = lc;
  if (lc.is_one()) return;
  Coeff inv = lc.inverse();
  e.poly = e.poly.scaled(inv);
  e.lc = Coeff::one(lc.characteristic());
  if (track)
    for (auto& c : e.cof) c = c.scaled(inv);
}

}  // namespace

GroebnerBasis buchberger(RingPtr ring, const std::vector<Polynomial>& gens,
                         const MonomialOrder& order, bool track_cofactors) {
  GroebnerBasis out;
  out.ring = ring;
  out.order = order;
  out.generators = gens;
  if (track_cofactors) out.cofactors.emplace();

  const std::size_t ngens = gens.size();
  std::vector<WorkElem> items;
  std::vector<Pair> pending;
  std::size_t pair_counter = 0;

  auto add_pairs_for = [&](std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
      if (items[i].lm.coprime(items[n].lm)) continue;  // Buchberger criterion
      Monomial l = Monomial::lcm(items[i].lm, items[n].lm);
      pending.push_back(Pair{i, n, l.total_degree(), pair_counter++});
    }
  };

  for (std::size_t g = 0; g < ngens; ++g) {
    const Polynomial& p = gens[g];
    if (p.is_zero()) continue;
    require_same_ring(ring, p.ring());
    WorkElem e;
    e.poly = p;
    if (track_cofactors) {
      e.cof.assign(ngens, Polynomial::zero(ring));
      e.cof[g] = Polynomial::constant(ring, 1);
    }
    make_monic(e, order, track_cofactors);
    items.push_back(std::move(e));
    add_pairs_for(items.size() - 1);
  }

  while (!pending.empty()) {
    std::size_t pick = 0;
    for (std::size_t k = 1; k < pending.size(); ++k) {
      const Pair& a = pending[k];
      const Pair& b = pending[pick];
      if (a.lcm_degree < b.lcm_degree ||
          (a.lcm_degree == b.lcm_degree && a.created < b.created))
        pick = k;
    }
    Pair pr = pending[pick];
    pending.erase(pending.begin() + static_cast<std::ptrdiff_t>(pick));

    const WorkElem& ei = items[pr.i];
    const WorkElem& ej = items[pr.j];
    Monomial l = Monomial::lcm(ei.lm, ej.lm);
    // Both elements are monic, so the S-polynomial needs no scaling.
    Monomial qi = l / ei.lm;
    Monomial qj = l / ej.lm;
    Coeff one = Coeff::one(ring->characteristic());
    WorkElem s;
    s.poly = ei.poly.times_term(qi, one) - ej.poly.times_term(qj, one);
    if (track_cofactors) {
      s.cof.assign(ngens, Polynomial::zero(ring));
      for (std::size_t g = 0; g < ngens; ++g) {
        Polynomial v = Polynomial::zero(ring);
        if (!ei.cof[g].is_zero()) v = v + ei.cof[g].times_term(qi, one);
        if (!ej.cof[g].is_zero()) v = v - ej.cof[g].times_term(qj, one);
        s.cof[g] = std::move(v);
      }
    }
    reduce_tracked(s.poly, track_cofactors ? &s.cof : nullptr, items, order);
    if (s.poly.is_zero()) continue;
    make_monic(s, order, track_cofactors);
    items.push_back(std::move(s));
    add_pairs_for(items.size() - 1);
  }

  // Minimalize: keep only elements whose leading monomial is not divisible
  // by another kept element's leading monomial, scanning by ascending lm.
  std::vector<std::size_t> idx(items.size());
  for (std::size_t k = 0; k < idx.size(); ++k) idx[k] = k;
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    int c = cmp_monomials(order, items[a].lm, items[b].lm);
    if (c != 0) return c < 0;
    return a < b;
  });
  std::vector<std::size_t> kept;
  for (std::size_t k : idx) {
    bool divisible = false;
    for (std::size_t h : kept) {
      if (items[h].lm.divides(items[k].lm)) {
        divisible = true;
        break;
      }
    }
    if (!divisible) kept.push_back(k);
  }

  // Tail-reduce each kept element against the others.
  std::vector<WorkElem> reduced;
  for (std::size_t n = 0; n < kept.size(); ++n) {
    std::vector<WorkElem> others;
    for (std::size_t m = 0; m < kept.size(); ++m)
      if (m != n) others.push_back(items[kept[m]]);
    WorkElem e = items[kept[n]];
    reduce_tracked(e.poly, track_cofactors ? &e.cof : nullptr, others, order);
    make_monic(e, order, track_cofactors);
    reduced.push_back(std::move(e));
  }

  for (auto& e : reduced) {
    out.basis.push_back(std::move(e.poly));
    if (track_cofactors) out.cofactors->push_back(std::move(e.cof));
  }
  return out;
}

Polynomial reduce(const Polynomial& f, const GroebnerBasis& gb) {
  return divide(f, gb.basis, gb.order).remainder;
}

ExtendedReduction extended_reduce(const Polynomial& f,
                                  const GroebnerBasis& gb) {
  if (!gb.has_cofactors())
    fail(ErrorKind::MissingCofactors, "basis lacks cofactor tracking");
  DivisionResult d = divide(f, gb.basis, gb.order);
  ExtendedReduction out;
  out.remainder = d.remainder;
  out.combination.assign(gb.generators.size(), Polynomial::zero(f.ring()));
  for (std::size_t i = 0; i < gb.basis.size(); ++i) {
    if (d.quotients[i].is_zero()) continue;
    const auto& row = (*gb.cofactors)[i];
    for (std::size_t j = 0; j < row.size(); ++j)
      if (!row[j].is_zero())
        out.combination[j] = out.combination[j] + d.quotients[i] * row[j];
  }
  return out;
}

}  // namespace chainlift

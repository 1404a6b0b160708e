#include "chainlift/division.hpp"

#include "chainlift/error.hpp"

namespace chainlift {

DivisionResult divide(const Polynomial& f,
                      const std::vector<Polynomial>& divisors,
                      const MonomialOrder& order) {
  for (const auto& g : divisors) {
    if (g.is_zero()) fail(ErrorKind::ZeroDivisorPolynomial, "zero divisor");
    require_same_ring(f.ring(), g.ring());
  }

  std::vector<std::pair<Monomial, Coeff>> lead;
  lead.reserve(divisors.size());
  for (const auto& g : divisors) lead.push_back(g.leading_term(order));

  DivisionResult out;
  out.quotients.assign(divisors.size(), Polynomial::zero(f.ring()));
  out.remainder = Polynomial::zero(f.ring());

  Polynomial h = f;
  while (!h.is_zero()) {
    // Largest monomial of h reducible by some divisor.
    const Monomial* best = nullptr;
    const Coeff* best_c = nullptr;
    std::size_t best_div = 0;
    for (const auto& [m, c] : h.terms()) {
      if (best && cmp_monomials(order, m, *best) <= 0) continue;
      for (std::size_t j = 0; j < divisors.size(); ++j) {
        if (lead[j].first.divides(m)) {
          best = &m;
          best_c = &c;
          best_div = j;
          break;
        }
      }
    }
    if (!best) {
      out.remainder = out.remainder + h;
      break;
    }
    Monomial q = *best / lead[best_div].first;
    Coeff c = *best_c / lead[best_div].second;
    out.quotients[best_div] =
        out.quotients[best_div] + Polynomial::term(f.ring(), q, c);
    h = h - divisors[best_div].times_term(q, c);
  }
  return out;
}

}  // namespace chainlift

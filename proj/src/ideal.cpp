#include "chainlift/ideal.hpp"

#include <algorithm>

#include "chainlift/error.hpp"

namespace chainlift {

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> gens)
    : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
  if (!ring_) fail(ErrorKind::RingMismatch, "ideal needs a ring");
  for (auto& g : gens) {
    if (g.is_zero()) continue;
    require_same_ring(ring_, g.ring());
    gens_.push_back(std::move(g));
  }
}

const GroebnerBasis& Ideal::groebner(const MonomialOrder& order,
                                     bool cofactors) const {
  if (!cache_) fail(ErrorKind::RingMismatch, "detached ideal");
  const std::string key = order.name() + (cofactors ? "+cof" : "");
  {
    std::lock_guard<std::mutex> lock(cache_->mu);
    auto it = cache_->bases.find(key);
    if (it != cache_->bases.end()) return *it->second;
    if (!cofactors) {
      // A cofactored basis answers plain requests too.
      it = cache_->bases.find(order.name() + "+cof");
      if (it != cache_->bases.end()) return *it->second;
    }
  }
  auto gb = std::make_shared<GroebnerBasis>(
      buchberger(ring_, gens_, order, cofactors));
  std::lock_guard<std::mutex> lock(cache_->mu);
  auto [it, fresh] = cache_->bases.emplace(key, std::move(gb));
  return *it->second;
}

const std::vector<Polynomial>& Ideal::canonical_gens() const {
  return groebner().basis;
}

std::string Ideal::str() const {
  const auto& basis = canonical_gens();
  if (basis.empty()) return "(0)";
  std::string s = "(";
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (i) s += ',';
    s += basis[i].str();
  }
  return s + ")";
}

bool membership(const Polynomial& f, const Ideal& I) {
  require_same_ring(f.ring(), I.ring());
  if (f.is_zero()) return true;
  return reduce(f, I.groebner()).is_zero();
}

std::optional<std::vector<Polynomial>> membership_combination(
    const Polynomial& f, const Ideal& I) {
  require_same_ring(f.ring(), I.ring());
  const GroebnerBasis& gb = I.groebner(MonomialOrder::grevlex(), true);
  ExtendedReduction r = extended_reduce(f, gb);
  if (!r.remainder.is_zero()) return std::nullopt;
  return r.combination;
}

bool ideal_contains(const Ideal& I, const Ideal& J) {
  for (const auto& g : J.gens())
    if (!membership(g, I)) return false;
  return true;
}

bool ideal_equal(const Ideal& I, const Ideal& J) {
  require_same_ring(I.ring(), J.ring());
  return I.canonical_gens() == J.canonical_gens();
}

Ideal add(const Ideal& I, const Ideal& J) {
  require_same_ring(I.ring(), J.ring());
  std::vector<Polynomial> gens = I.gens();
  gens.insert(gens.end(), J.gens().begin(), J.gens().end());
  return Ideal(I.ring(), std::move(gens));
}

Ideal add(const Ideal& I, const Polynomial& f) {
  std::vector<Polynomial> gens = I.gens();
  gens.push_back(f);
  return Ideal(I.ring(), std::move(gens));
}

RingPtr prepend_vars(const RingPtr& ring, std::size_t count,
                     const std::string& stem) {
  std::vector<std::string> vars;
  vars.reserve(count + ring->nvars());
  for (std::size_t i = 0; i < count; ++i)
    vars.push_back(stem + std::to_string(i));
  for (const auto& v : ring->vars()) vars.push_back(v);
  return PolyRing::make(std::move(vars), ring->characteristic());
}

Polynomial lift_at(const Polynomial& f, const RingPtr& big,
                   std::size_t offset) {
  const std::size_t n = f.ring()->nvars();
  if (offset + n > big->nvars())
    fail(ErrorKind::ArityMismatch, "lift does not fit the target ring");
  Polynomial out = Polynomial::zero(big);
  for (const auto& [m, c] : f.terms()) {
    std::vector<int> e(big->nvars(), 0);
    for (std::size_t i = 0; i < n; ++i) e[offset + i] = m[i];
    out = out + Polynomial::term(big, Monomial(std::move(e)), c);
  }
  return out;
}

Polynomial drop_prefix(const Polynomial& f, const RingPtr& small,
                       std::size_t k) {
  Polynomial out = Polynomial::zero(small);
  for (const auto& [m, c] : f.terms()) {
    std::vector<int> e(small->nvars(), 0);
    for (std::size_t i = 0; i < k; ++i) {
      if (m[i] != 0)
        fail(ErrorKind::InvalidArgument, "polynomial uses an eliminated variable");
    }
    for (std::size_t i = k; i < m.size(); ++i) e[i - k] = m[i];
    out = out + Polynomial::term(small, Monomial(std::move(e)), c);
  }
  return out;
}

Ideal eliminate(const Ideal& I, std::size_t k, RingPtr into) {
  const RingPtr& ring = I.ring();
  if (k > ring->nvars())
    fail(ErrorKind::InvalidArgument, "cannot eliminate more variables than exist");
  if (!into) {
    std::vector<std::string> vars(ring->vars().begin() +
                                      static_cast<std::ptrdiff_t>(k),
                                  ring->vars().end());
    std::optional<Grading> g;
    if (ring->grading())
      g = Grading(ring->grading()->begin() + static_cast<std::ptrdiff_t>(k),
                  ring->grading()->end());
    into = PolyRing::make(std::move(vars), ring->characteristic(), std::move(g));
  }
  if (into->nvars() != ring->nvars() - k ||
      into->characteristic() != ring->characteristic())
    fail(ErrorKind::RingMismatch, "elimination target ring mismatch");

  const GroebnerBasis& gb = I.groebner(MonomialOrder::block(k));
  std::vector<Polynomial> gens;
  for (const auto& b : gb.basis) {
    bool uses_prefix = false;
    for (std::size_t i = 0; i < k && !uses_prefix; ++i)
      uses_prefix = b.uses_var(i);
    if (!uses_prefix) gens.push_back(drop_prefix(b, into, k));
  }
  return Ideal(into, std::move(gens));
}

Ideal intersect(const Ideal& I, const Ideal& J) {
  require_same_ring(I.ring(), J.ring());
  const RingPtr& ring = I.ring();
  RingPtr big = prepend_vars(ring, 1);
  Polynomial t = Polynomial::variable(big, 0);
  Polynomial one = Polynomial::constant(big, 1);
  std::vector<Polynomial> gens;
  for (const auto& g : I.gens()) gens.push_back(t * lift_at(g, big, 1));
  for (const auto& g : J.gens()) gens.push_back((one - t) * lift_at(g, big, 1));
  return eliminate(Ideal(big, std::move(gens)), 1, ring);
}

Ideal quotient(const Ideal& I, const Polynomial& f) {
  require_same_ring(I.ring(), f.ring());
  if (f.is_zero()) fail(ErrorKind::ZeroElement, "quotient by zero");
  Ideal cap = intersect(I, Ideal(I.ring(), {f}));
  std::vector<Polynomial> gens;
  for (const auto& g : cap.gens()) {
    DivisionResult d = divide(g, {f}, MonomialOrder::grevlex());
    if (!d.remainder.is_zero())
      fail(ErrorKind::InvalidArgument, "inexact division in ideal quotient");
    gens.push_back(d.quotients[0]);
  }
  return Ideal(I.ring(), std::move(gens));
}

Ideal saturate(const Ideal& I, const Polynomial& f) {
  require_same_ring(I.ring(), f.ring());
  if (f.is_zero()) fail(ErrorKind::ZeroElement, "saturation by zero");
  const RingPtr& ring = I.ring();
  RingPtr big = prepend_vars(ring, 1);
  Polynomial t = Polynomial::variable(big, 0);
  Polynomial one = Polynomial::constant(big, 1);
  std::vector<Polynomial> gens;
  for (const auto& g : I.gens()) gens.push_back(lift_at(g, big, 1));
  gens.push_back(one - t * lift_at(f, big, 1));
  return eliminate(Ideal(big, std::move(gens)), 1, ring);
}

bool radical_membership(const Polynomial& f, const Ideal& I) {
  require_same_ring(f.ring(), I.ring());
  const RingPtr& ring = I.ring();
  RingPtr big = prepend_vars(ring, 1);
  Polynomial t = Polynomial::variable(big, 0);
  Polynomial one = Polynomial::constant(big, 1);
  std::vector<Polynomial> gens;
  for (const auto& g : I.gens()) gens.push_back(lift_at(g, big, 1));
  gens.push_back(one - t * lift_at(f, big, 1));
  return Ideal(big, std::move(gens)).is_unit();
}

}  // namespace chainlift

#include "chainlift/polynomial.hpp"

#include <algorithm>
#include <set>

#include "chainlift/error.hpp"

namespace chainlift {

Polynomial Polynomial::zero(RingPtr ring) {
  Polynomial p;
  p.ring_ = std::move(ring);
  return p;
}

Polynomial Polynomial::constant(RingPtr ring, const Coeff& c) {
  return term(std::move(ring), Monomial(), c);
}

Polynomial Polynomial::constant(RingPtr ring, long c) {
  Coeff v = Coeff::of_long(c, ring->characteristic());
  return constant(std::move(ring), v);
}

Polynomial Polynomial::term(RingPtr ring, Monomial m, const Coeff& c) {
  if (m.size() == 0) m = Monomial::unit(ring->nvars());
  if (m.size() != ring->nvars())
    fail(ErrorKind::ArityMismatch, "monomial arity != ring variable count");
  if (c.characteristic() != ring->characteristic())
    fail(ErrorKind::RingMismatch, "coefficient characteristic != ring");
  Polynomial p;
  p.ring_ = std::move(ring);
  if (!c.is_zero()) p.terms_.emplace(std::move(m), c);
  return p;
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t var) {
  std::vector<int> e(ring->nvars(), 0);
  e.at(var) = 1;
  return term(std::move(ring), Monomial(std::move(e)),
              Coeff::one(ring->characteristic()));
}

bool Polynomial::is_constant() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 && terms_.begin()->first.is_unit();
}

Coeff Polynomial::constant_coeff() const {
  if (!ring_) fail(ErrorKind::RingMismatch, "detached polynomial");
  auto it = terms_.find(Monomial::unit(ring_->nvars()));
  if (it == terms_.end()) return Coeff::zero(ring_->characteristic());
  return it->second;
}

long Polynomial::total_degree() const {
  long d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
  return d;
}

void Polynomial::check_ring(const Polynomial& o) const {
  require_same_ring(ring_, o.ring_);
}

void Polynomial::insert_term(const Monomial& m, const Coeff& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial p(*this);
  for (auto& [m, c] : p.terms_) c = -c;
  return p;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  check_ring(o);
  Polynomial p(*this);
  for (const auto& [m, c] : o.terms_) p.insert_term(m, c);
  return p;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  check_ring(o);
  Polynomial p(*this);
  for (const auto& [m, c] : o.terms_) p.insert_term(m, -c);
  return p;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  check_ring(o);
  Polynomial p = Polynomial::zero(ring_);
  for (const auto& [m1, c1] : terms_)
    for (const auto& [m2, c2] : o.terms_) p.insert_term(m1 * m2, c1 * c2);
  return p;
}

Polynomial Polynomial::scaled(const Coeff& c) const {
  if (c.characteristic() != ring_->characteristic())
    fail(ErrorKind::RingMismatch, "coefficient characteristic != ring");
  Polynomial p = Polynomial::zero(ring_);
  if (c.is_zero()) return p;
  for (const auto& [m, v] : terms_) p.terms_.emplace(m, v * c);
  return p;
}

Polynomial Polynomial::times_term(const Monomial& m, const Coeff& c) const {
  Polynomial p = Polynomial::zero(ring_);
  if (c.is_zero()) return p;
  for (const auto& [mm, v] : terms_) p.terms_.emplace(mm * m, v * c);
  return p;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial acc = Polynomial::constant(ring_, 1);
  Polynomial base(*this);
  while (e) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (!ring_ || !o.ring_) return terms_.empty() && o.terms_.empty();
  if (!ring_->compatible(*o.ring_)) return false;
  return terms_ == o.terms_;
}

std::pair<Monomial, Coeff> Polynomial::leading_term(
    const MonomialOrder& order) const {
  if (terms_.empty()) fail(ErrorKind::ZeroPolynomial, "zero has no leading term");
  auto best = terms_.begin();
  for (auto it = std::next(best); it != terms_.end(); ++it)
    if (cmp_monomials(order, it->first, best->first) > 0) best = it;
  return {best->first, best->second};
}

Monomial Polynomial::leading_monomial(const MonomialOrder& order) const {
  return leading_term(order).first;
}

Coeff Polynomial::leading_coeff(const MonomialOrder& order) const {
  return leading_term(order).second;
}

Polynomial Polynomial::monic(const MonomialOrder& order) const {
  if (terms_.empty()) return *this;
  return scaled(leading_coeff(order).inverse());
}

std::optional<long> Polynomial::homogeneous_degree(const Grading& w) const {
  if (terms_.empty()) fail(ErrorKind::ZeroPolynomial, "zero polynomial");
  std::optional<long> d;
  for (const auto& [m, c] : terms_) {
    long dm = m.weighted_degree(w);
    if (!d)
      d = dm;
    else if (*d != dm)
      return std::nullopt;
  }
  return d;
}

Polynomial Polynomial::project_degree(long d, const Grading& w) const {
  Polynomial p = Polynomial::zero(ring_);
  for (const auto& [m, c] : terms_)
    if (m.weighted_degree(w) == d) p.terms_.emplace(m, c);
  return p;
}

std::vector<long> Polynomial::occurring_degrees(const Grading& w) const {
  std::set<long> ds;
  for (const auto& [m, c] : terms_) ds.insert(m.weighted_degree(w));
  return {ds.begin(), ds.end()};
}

bool Polynomial::uses_var(std::size_t var) const {
  for (const auto& [m, c] : terms_)
    if (m[var] > 0) return true;
  return false;
}

std::string monomial_str(const Monomial& m, const PolyRing& ring) {
  std::string s;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += ring.vars()[i];
    if (m[i] > 1) s += '^' + std::to_string(m[i]);
  }
  return s;
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  // Descending grevlex.
  std::vector<const std::pair<const Monomial, Coeff>*> ts;
  ts.reserve(terms_.size());
  for (const auto& t : terms_) ts.push_back(&t);
  MonomialOrder ord = MonomialOrder::grevlex();
  std::stable_sort(ts.begin(), ts.end(), [&](auto* a, auto* b) {
    return cmp_monomials(ord, a->first, b->first) > 0;
  });
  std::string s;
  bool first = true;
  for (auto* t : ts) {
    const Coeff& c = t->second;
    const Monomial& m = t->first;
    Coeff a = c.abs();
    if (first) {
      if (c.negative()) s += '-';
      first = false;
    } else {
      s += c.negative() ? '-' : '+';
    }
    std::string ms = monomial_str(m, *ring_);
    if (ms.empty()) {
      s += a.str();
    } else {
      if (!a.is_one()) s += a.str() + '*';
      s += ms;
    }
  }
  return s;
}

}  // namespace chainlift

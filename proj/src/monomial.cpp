#include "chainlift/monomial.hpp"

#include <algorithm>
#include <set>

#include "chainlift/error.hpp"

namespace chainlift {

RingPtr PolyRing::make(std::vector<std::string> vars,
                       std::uint32_t characteristic,
                       std::optional<Grading> grading) {
  if (vars.empty()) fail(ErrorKind::InvalidArgument, "ring needs variables");
  std::set<std::string> seen;
  for (const auto& v : vars) {
    if (v.empty()) fail(ErrorKind::InvalidArgument, "empty variable name");
    if (!seen.insert(v).second)
      fail(ErrorKind::InvalidArgument, "duplicate variable " + v);
  }
  if (characteristic != 0) {
    if (characteristic >= (1u << 31))
      fail(ErrorKind::BadCharacteristic, "characteristic too large");
    mpz_class p(characteristic);
    if (mpz_probab_prime_p(p.get_mpz_t(), 30) == 0)
      fail(ErrorKind::BadCharacteristic,
           "characteristic " + std::to_string(characteristic) + " is not prime");
  }
  if (grading && grading->size() != vars.size())
    fail(ErrorKind::ArityMismatch, "grading length != variable count");
  auto r = std::shared_ptr<PolyRing>(new PolyRing());
  r->vars_ = std::move(vars);
  r->char_ = characteristic;
  r->grading_ = std::move(grading);
  return r;
}

std::optional<std::size_t> PolyRing::var_index(std::string_view name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i] == name) return i;
  return std::nullopt;
}

void require_same_ring(const RingPtr& a, const RingPtr& b) {
  if (!a || !b) fail(ErrorKind::RingMismatch, "missing ring");
  if (!a->compatible(*b)) fail(ErrorKind::RingMismatch, "rings differ");
}

bool Monomial::is_unit() const {
  return std::all_of(exps_.begin(), exps_.end(), [](int e) { return e == 0; });
}

long Monomial::total_degree() const {
  long d = 0;
  for (int e : exps_) d += e;
  return d;
}

long Monomial::weighted_degree(const Grading& w) const {
  if (w.size() != exps_.size())
    fail(ErrorKind::ArityMismatch, "grading length != variable count");
  long d = 0;
  for (std::size_t i = 0; i < exps_.size(); ++i) d += w[i] * exps_[i];
  return d;
}

bool Monomial::divides(const Monomial& other) const {
  if (exps_.size() != other.exps_.size())
    fail(ErrorKind::ArityMismatch, "monomials from different rings");
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

bool Monomial::coprime(const Monomial& other) const {
  if (exps_.size() != other.exps_.size())
    fail(ErrorKind::ArityMismatch, "monomials from different rings");
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > 0 && other.exps_[i] > 0) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  if (exps_.size() != other.exps_.size())
    fail(ErrorKind::ArityMismatch, "monomials from different rings");
  std::vector<int> e(exps_);
  for (std::size_t i = 0; i < e.size(); ++i) e[i] += other.exps_[i];
  return Monomial(std::move(e));
}

Monomial Monomial::operator/(const Monomial& other) const {
  if (exps_.size() != other.exps_.size())
    fail(ErrorKind::ArityMismatch, "monomials from different rings");
  std::vector<int> e(exps_);
  for (std::size_t i = 0; i < e.size(); ++i) {
    e[i] -= other.exps_[i];
    if (e[i] < 0) fail(ErrorKind::InvalidArgument, "inexact monomial division");
  }
  return Monomial(std::move(e));
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  if (a.size() != b.size())
    fail(ErrorKind::ArityMismatch, "monomials from different rings");
  std::vector<int> e(a.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(a[i], b[i]);
  return Monomial(std::move(e));
}

Monomial Monomial::pow(unsigned e) const {
  std::vector<int> v(exps_);
  for (auto& x : v) x = static_cast<int>(x * e);
  return Monomial(std::move(v));
}

std::string MonomialOrder::name() const {
  switch (kind) {
    case Kind::lex: return "lex";
    case Kind::grlex: return "grlex";
    case Kind::grevlex: return "grevlex";
    case Kind::block: return "block:" + std::to_string(split);
  }
  return "?";
}

namespace {

int cmp_lex(const int* a, const int* b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

int cmp_grevlex(const int* a, const int* b, std::size_t n) {
  long da = 0, db = 0;
  for (std::size_t i = 0; i < n; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da < db ? -1 : 1;
  // Equal degree: the last nonzero entry of a-b decides, reversed sign.
  for (std::size_t i = n; i-- > 0;) {
    if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
  }
  return 0;
}

}  // namespace

int cmp_monomials(const MonomialOrder& order, const Monomial& m1,
                  const Monomial& m2) {
  if (m1.size() != m2.size())
    fail(ErrorKind::ArityMismatch, "monomials from different rings");
  const std::size_t n = m1.size();
  const int* a = m1.exps().data();
  const int* b = m2.exps().data();
  switch (order.kind) {
    case MonomialOrder::Kind::lex:
      return cmp_lex(a, b, n);
    case MonomialOrder::Kind::grlex: {
      long da = m1.total_degree(), db = m2.total_degree();
      if (da != db) return da < db ? -1 : 1;
      return cmp_lex(a, b, n);
    }
    case MonomialOrder::Kind::grevlex:
      return cmp_grevlex(a, b, n);
    case MonomialOrder::Kind::block: {
      const std::size_t k = std::min(order.split, n);
      if (int c = cmp_grevlex(a, b, k)) return c;
      return cmp_grevlex(a + k, b + k, n - k);
    }
  }
  return 0;
}

}  // namespace chainlift

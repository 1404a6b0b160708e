#include "chainlift/coeff.hpp"

#include "chainlift/error.hpp"

namespace chainlift {

const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::UnknownVariable: return "UnknownVariable";
    case ErrorKind::BadCharacteristic: return "BadCharacteristic";
    case ErrorKind::ArityMismatch: return "ArityMismatch";
    case ErrorKind::RingMismatch: return "RingMismatch";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::ZeroElement: return "ZeroElement";
    case ErrorKind::ZeroDivisorPolynomial: return "ZeroDivisorPolynomial";
    case ErrorKind::MissingCofactors: return "MissingCofactors";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::WitnessNotOutside: return "WitnessNotOutside";
    case ErrorKind::ResolutionError: return "ResolutionError";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Error";
}

Coeff Coeff::rational(mpq_class q) {
  Coeff c;
  c.p_ = 0;
  q.canonicalize();
  c.q_ = std::move(q);
  return c;
}

Coeff Coeff::rational(long num, long den) {
  if (den == 0) fail(ErrorKind::ZeroElement, "zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return rational(q);
}

Coeff Coeff::mod_p(const mpz_class& v, std::uint32_t p) {
  if (p == 0) fail(ErrorKind::InvalidArgument, "modulus must be positive");
  Coeff c;
  c.p_ = p;
  mpz_class r;
  mpz_mod(r.get_mpz_t(), v.get_mpz_t(), mpz_class(p).get_mpz_t());
  c.q_ = mpq_class(r);
  return c;
}

Coeff Coeff::of_long(long v, std::uint32_t p) {
  if (p == 0) return rational(v);
  return mod_p(mpz_class(v), p);
}

void Coeff::match(const Coeff& o) const {
  if (p_ != o.p_)
    fail(ErrorKind::RingMismatch, "coefficients of different characteristic");
}

void Coeff::reduce() {
  if (p_ == 0) {
    q_.canonicalize();
    return;
  }
  mpz_class num = q_.get_num();
  mpz_class r;
  mpz_mod(r.get_mpz_t(), num.get_mpz_t(), mpz_class(p_).get_mpz_t());
  q_ = mpq_class(r);
}

Coeff Coeff::operator-() const {
  Coeff c(*this);
  c.q_ = -c.q_;
  c.reduce();
  return c;
}

Coeff& Coeff::operator+=(const Coeff& o) {
  match(o);
  q_ += o.q_;
  reduce();
  return *this;
}

Coeff& Coeff::operator-=(const Coeff& o) {
  match(o);
  q_ -= o.q_;
  reduce();
  return *this;
}

Coeff& Coeff::operator*=(const Coeff& o) {
  match(o);
  q_ *= o.q_;
  reduce();
  return *this;
}

Coeff Coeff::inverse() const {
  if (is_zero()) fail(ErrorKind::ZeroElement, "inverse of zero");
  Coeff c;
  c.p_ = p_;
  if (p_ == 0) {
    c.q_ = 1 / q_;
    return c;
  }
  mpz_class inv;
  if (!mpz_invert(inv.get_mpz_t(), mpz_class(q_.get_num()).get_mpz_t(),
                  mpz_class(p_).get_mpz_t()))
    fail(ErrorKind::ZeroElement, "non-invertible residue");
  c.q_ = mpq_class(inv);
  return c;
}

std::string Coeff::str() const { return q_.get_str(); }

}  // namespace chainlift

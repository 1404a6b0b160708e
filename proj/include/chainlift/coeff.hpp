#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace chainlift {

// An exact field element: a rational in lowest terms (characteristic 0) or a
// residue in [0, p) for a prime p < 2^31 (characteristic p). The
// characteristic travels with the value; mixing characteristics throws
// RingMismatch. No floating point anywhere.
class Coeff {
public:
  Coeff() : p_(0), q_(0) {}

  static Coeff rational(mpq_class q);
  static Coeff rational(long num, long den = 1);
  static Coeff mod_p(const mpz_class& v, std::uint32_t p);
  static Coeff zero(std::uint32_t p) { return of_long(0, p); }
  static Coeff one(std::uint32_t p) { return of_long(1, p); }
  // Integer literal in the field of characteristic p (0 = rationals).
  static Coeff of_long(long v, std::uint32_t p);

  std::uint32_t characteristic() const { return p_; }
  bool is_zero() const { return q_ == 0; }
  bool is_one() const { return p_ == 0 ? q_ == 1 : q_ == 1; }
  const mpq_class& value() const { return q_; }

  Coeff operator-() const;
  Coeff& operator+=(const Coeff& o);
  Coeff& operator-=(const Coeff& o);
  Coeff& operator*=(const Coeff& o);
  Coeff inverse() const;  // ZeroElement on zero
  Coeff& operator/=(const Coeff& o) { return *this *= o.inverse(); }

  friend Coeff operator+(Coeff a, const Coeff& b) { return a += b; }
  friend Coeff operator-(Coeff a, const Coeff& b) { return a -= b; }
  friend Coeff operator*(Coeff a, const Coeff& b) { return a *= b; }
  friend Coeff operator/(Coeff a, const Coeff& b) { return a /= b; }

  bool operator==(const Coeff& o) const { return p_ == o.p_ && q_ == o.q_; }
  bool operator!=(const Coeff& o) const { return !(*this == o); }

  // Sign for printing; residues mod p are never negative.
  bool negative() const { return p_ == 0 && q_ < 0; }
  Coeff abs() const { return negative() ? -*this : *this; }

  std::string str() const;

private:
  void match(const Coeff& o) const;
  void reduce();

  std::uint32_t p_;  // 0 = rationals
  mpq_class q_;      // canonical fraction; integer in [0, p) when p_ > 0
};

}  // namespace chainlift

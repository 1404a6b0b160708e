#include "chainlift/factor.hpp"

#include <algorithm>
#include <set>

#include "chainlift/error.hpp"

namespace chainlift {

namespace {

std::vector<std::size_t> vars_used(const Polynomial& g) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < g.ring()->nvars(); ++i)
    if (g.uses_var(i)) out.push_back(i);
  return out;
}

Monomial monomial_content(const Polynomial& g) {
  std::vector<int> e;
  bool first = true;
  for (const auto& [m, c] : g.terms()) {
    if (first) {
      e = m.exps();
      first = false;
      continue;
    }
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::min(e[i], m[i]);
  }
  return Monomial(std::move(e));
}

Polynomial divide_by_monomial(const Polynomial& g, const Monomial& m) {
  Polynomial out = Polynomial::zero(g.ring());
  for (const auto& [mm, c] : g.terms())
    out = out + Polynomial::term(g.ring(), mm / m, c);
  return out;
}

// --- exact rational helpers ---------------------------------------------

bool perfect_power(const mpq_class& q, unsigned k, mpq_class& root) {
  if (q == 0) {
    root = 0;
    return true;
  }
  mpq_class a = q;
  bool neg = a < 0;
  if (neg) {
    if (k % 2 == 0) return false;
    a = -a;
  }
  mpz_class num = a.get_num(), den = a.get_den();
  mpz_class rn, rd;
  if (!mpz_root(rn.get_mpz_t(), num.get_mpz_t(), k)) return false;
  if (!mpz_root(rd.get_mpz_t(), den.get_mpz_t(), k)) return false;
  root = mpq_class(neg ? -rn : rn, rd);
  root.canonicalize();
  return true;
}

// Divisors of |n| by trial division; nullopt when n is too hard to factor
// within the bound (callers then stay Undecided).
std::optional<std::vector<mpz_class>> divisors_of(mpz_class n) {
  n = abs(n);
  if (n == 0) return std::nullopt;
  std::vector<std::pair<mpz_class, unsigned>> factors;
  mpz_class d = 2;
  const long trial_bound = 1000000;
  while (n > 1 && d <= trial_bound) {
    if (n % d == 0) {
      unsigned e = 0;
      while (n % d == 0) {
        n /= d;
        ++e;
      }
      factors.emplace_back(d, e);
    }
    d += (d == 2) ? 1 : 2;
    if (d * d > n) break;
  }
  if (n > 1) {
    if (mpz_probab_prime_p(n.get_mpz_t(), 30))
      factors.emplace_back(n, 1);
    else if (n <= trial_bound * mpz_class(trial_bound))
      factors.emplace_back(n, 1);  // below the bound squared, n must be prime
    else
      return std::nullopt;
  }
  std::vector<mpz_class> divs{1};
  for (const auto& [p, e] : factors) {
    std::size_t base = divs.size();
    mpz_class pe = 1;
    for (unsigned i = 1; i <= e; ++i) {
      pe *= p;
      for (std::size_t j = 0; j < base; ++j) divs.push_back(divs[j] * pe);
    }
    if (divs.size() > 20000) return std::nullopt;
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

// --- univariate machinery (dense, index = degree) ------------------------

using UPoly = std::vector<mpq_class>;

mpq_class ueval(const UPoly& p, const mpq_class& x) {
  mpq_class acc = 0;
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc;
}

UPoly udivide_linear(const UPoly& p, const mpq_class& root) {
  // p / (x - root), exact when root is a root.
  UPoly q(p.size() - 1);
  mpq_class carry = p.back();
  for (std::size_t i = p.size() - 1; i-- > 0;) {
    q[i] = carry;
    carry = p[i] + carry * root;
  }
  return q;
}

std::optional<std::vector<mpq_class>> rational_root_candidates(const UPoly& p) {
  // Integerize and take divisors of the primitive constant and lead.
  mpz_class lcm_den = 1;
  for (const auto& c : p)
    mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(),
            c.get_den().get_mpz_t());
  std::vector<mpz_class> ip;
  mpz_class content = 0;
  for (const auto& c : p) {
    mpq_class scaled = c * mpq_class(lcm_den);
    ip.push_back(scaled.get_num());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(),
            ip.back().get_mpz_t());
  }
  if (content > 1)
    for (auto& c : ip) c /= content;
  auto d0 = divisors_of(ip.front());
  auto d1 = divisors_of(ip.back());
  if (!d0 || !d1) return std::nullopt;
  std::set<mpq_class> cands;
  for (const auto& a : *d0)
    for (const auto& b : *d1) {
      mpq_class r(a, b);
      r.canonicalize();
      cands.insert(r);
      cands.insert(-r);
    }
  return std::vector<mpq_class>(cands.begin(), cands.end());
}

Polynomial upoly_to_ring(const UPoly& p, const RingPtr& ring,
                         std::size_t var) {
  Polynomial out = Polynomial::zero(ring);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] == 0) continue;
    std::vector<int> e(ring->nvars(), 0);
    e[var] = static_cast<int>(i);
    out = out + Polynomial::term(ring, Monomial(std::move(e)),
                                 Coeff::rational(p[i]));
  }
  return out;
}

// Shift: q(x) = p(x + h).
UPoly ushift(const UPoly& p, const mpq_class& h) {
  UPoly out(p.size(), mpq_class(0));
  for (std::size_t i = p.size(); i-- > 0;) {
    // out = out * (x + h) + p[i]
    UPoly next(out.size(), mpq_class(0));
    for (std::size_t j = 0; j + 1 < out.size(); ++j) {
      next[j + 1] += out[j];
      next[j] += out[j] * h;
    }
    next[0] += p[i];
    out = std::move(next);
  }
  return out;
}

struct UProbe {
  Irreducibility status = Irreducibility::Undecided;
  std::optional<std::pair<UPoly, UPoly>> split;
};

// Quartic split into two monic quadratics over Q, if one exists. Input is
// monic of degree 4 with no rational root.
std::optional<std::pair<UPoly, UPoly>> quartic_quadratic_split(
    const UPoly& p, bool& undecided) {
  const mpq_class c3 = p[3], c2 = p[2], c1 = p[1], c0 = p[0];
  const mpq_class h = -c3 / 4;
  UPoly dep = ushift(p, h);  // y^4 + P y^2 + Q y + R
  const mpq_class P = dep[2], Q = dep[1], R = dep[0];

  auto undepress = [&](const mpq_class& s, const mpq_class& t) -> UPoly {
    // (y^2 + s y + t) with y = x - h
    return UPoly{h * h - s * h + t, s - 2 * h, 1};
  };

  if (Q == 0) {
    // Biquadratic: try (y^2+alpha)(y^2+beta) with rational alpha, beta.
    mpq_class disc = P * P - 4 * R, sq;
    if (perfect_power(disc, 2, sq)) {
      mpq_class alpha = (P - sq) / 2, beta = (P + sq) / 2;
      return std::make_pair(undepress(0, alpha), undepress(0, beta));
    }
    // Or (y^2+ay+b)(y^2-ay+b) with b^2 = R, a^2 = 2b - P.
    mpq_class b;
    if (perfect_power(R, 2, b)) {
      for (int sign = 0; sign < 2; ++sign) {
        mpq_class bb = sign ? -b : b, a;
        if (perfect_power(2 * bb - P, 2, a) && a != 0)
          return std::make_pair(undepress(a, bb), undepress(-a, bb));
      }
    }
    return std::nullopt;
  }

  // Resolvent: z^3 + 2P z^2 + (P^2 - 4R) z - Q^2, roots z = s^2.
  UPoly res{-Q * Q, P * P - 4 * R, 2 * P, 1};
  auto cands = rational_root_candidates(res);
  if (!cands) {
    undecided = true;
    return std::nullopt;
  }
  for (const auto& z : *cands) {
    if (z <= 0 || ueval(res, z) != 0) continue;
    mpq_class s;
    if (!perfect_power(z, 2, s)) continue;
    if (s < 0) s = -s;
    mpq_class t = (P + z - Q / s) / 2;
    mpq_class u = (P + z + Q / s) / 2;
    if (t * u != R) continue;
    return std::make_pair(undepress(s, t), undepress(-s, u));
  }
  return std::nullopt;
}

UProbe univariate_probe(const UPoly& input) {
  UPoly p = input;
  while (!p.empty() && p.back() == 0) p.pop_back();
  const std::size_t deg = p.size() - 1;
  UProbe out;
  if (deg <= 1) {
    out.status = Irreducibility::Irreducible;
    return out;
  }
  if (deg > 4) return out;  // outside the family

  auto cands = rational_root_candidates(p);
  if (!cands) return out;
  for (const auto& r : *cands) {
    if (ueval(p, r) != 0) continue;
    out.status = Irreducibility::Reducible;
    out.split = std::make_pair(UPoly{-r, 1}, udivide_linear(p, r));
    return out;
  }
  if (deg <= 3) {
    // No rational root and degree 2 or 3: any factorization would need a
    // linear factor.
    out.status = Irreducibility::Irreducible;
    return out;
  }
  // Degree 4, no rational root: monicize and look for a quadratic split.
  mpq_class lead = p.back();
  UPoly monic = p;
  for (auto& c : monic) c /= lead;
  bool undecided = false;
  if (auto split = quartic_quadratic_split(monic, undecided)) {
    UPoly first = split->first;
    for (auto& c : first) c *= lead;
    out.status = Irreducibility::Reducible;
    out.split = std::make_pair(first, split->second);
    return out;
  }
  out.status = undecided ? Irreducibility::Undecided : Irreducibility::Irreducible;
  return out;
}

// --- pattern probes on ring polynomials -----------------------------------

// Exactly two terms: c1*m1 + c2*m2 with m1 != m2 (structural order m1 > m2).
struct TwoTerms {
  Monomial m1, m2;
  Coeff c1, c2;
};

std::optional<TwoTerms> two_terms(const Polynomial& g) {
  if (g.term_count() != 2) return std::nullopt;
  auto it = g.terms().begin();
  TwoTerms t;
  t.m2 = it->first;
  t.c2 = it->second;
  ++it;
  t.m1 = it->first;
  t.c1 = it->second;
  return t;
}

bool monomial_root(const Monomial& m, unsigned k, Monomial& root) {
  std::vector<int> e = m.exps();
  for (auto& x : e) {
    if (x % static_cast<int>(k) != 0) return false;
    x /= static_cast<int>(k);
  }
  root = Monomial(std::move(e));
  return true;
}

// c1*m1^k - c2*m2^k -> (a*r1 - b*r2) * (cofactor), k = 2 or 3.
std::optional<std::pair<Polynomial, Polynomial>> power_difference_split(
    const Polynomial& g, const TwoTerms& t) {
  if (g.ring()->characteristic() != 0) return std::nullopt;
  for (unsigned k : {2u, 3u}) {
    Monomial r1, r2;
    if (!monomial_root(t.m1, k, r1) || !monomial_root(t.m2, k, r2)) continue;
    mpq_class a, b;
    if (!perfect_power(t.c1.value(), k, a)) continue;
    if (!perfect_power(-t.c2.value(), k, b)) continue;
    const RingPtr& R = g.ring();
    Polynomial A = Polynomial::term(R, r1, Coeff::rational(a));
    Polynomial B = Polynomial::term(R, r2, Coeff::rational(b));
    Polynomial first = A - B;
    Polynomial second = (k == 2) ? (A + B) : (A * A + A * B + B * B);
    if (first.is_constant() || second.is_constant()) continue;
    return std::make_pair(first, second);
  }
  return std::nullopt;
}

// Conic handling for polynomials of total degree 2 in at most two variables.
FactorProbe conic_probe(const Polynomial& g, const std::vector<std::size_t>& vs) {
  FactorProbe out;
  if (g.ring()->characteristic() != 0) return out;
  const std::size_t x = vs[0], y = vs.size() > 1 ? vs[1] : vs[0];
  auto coeff_of = [&](int ex, int ey) -> mpq_class {
    for (const auto& [m, c] : g.terms()) {
      if (m[x] != ex) continue;
      if (vs.size() > 1 && m[y] != ey) continue;
      if (vs.size() == 1 && ey != 0) continue;
      return c.value();
    }
    return {};
  };
  const mpq_class a = coeff_of(2, 0), b = coeff_of(1, 1), c = coeff_of(0, 2);
  const mpq_class d = coeff_of(1, 0), e = coeff_of(0, 1), f = coeff_of(0, 0);

  // det of [[a, b/2, d/2], [b/2, c, e/2], [d/2, e/2, f]]
  mpq_class det = a * (c * f - e * e / 4) - (b / 2) * (b * f / 2 - d * e / 4) +
                  (d / 2) * (b * e / 4 - c * d / 2);
  if (det != 0) {
    out.status = Irreducibility::Irreducible;
    return out;
  }

  const RingPtr& R = g.ring();
  auto linear = [&](const mpq_class& cx, const mpq_class& cy,
                    const mpq_class& c0) {
    Polynomial p = Polynomial::constant(R, Coeff::rational(c0));
    if (cx != 0)
      p = p + Polynomial::variable(R, x).scaled(Coeff::rational(cx));
    if (cy != 0 && vs.size() > 1)
      p = p + Polynomial::variable(R, y).scaled(Coeff::rational(cy));
    return p;
  };

  if (a == 0 && c == 0) {
    if (b == 0) return out;  // no quadratic part in two variables
    // b*x*y + d*x + e*y + f, degenerate: f = d*e/b, so (b*x + e)(y + d/b).
    out.status = Irreducibility::Reducible;
    out.split = std::make_pair(linear(b, 0, e), linear(0, 1, d / b));
    return out;
  }

  // Treat as a quadratic in the variable with nonzero square coefficient.
  bool swapped = (a == 0);
  const mpq_class A = swapped ? c : a;
  const mpq_class Bq = b, D = swapped ? e : d, E = swapped ? d : e,
                  C = swapped ? a : c;
  // A u^2 + (B v + D) u + (C v^2 + E v + f); discriminant in v:
  // (B^2-4AC) v^2 + (2BD-4AE) v + (D^2-4Af)
  const mpq_class alpha = Bq * Bq - 4 * A * C;
  const mpq_class beta = 2 * Bq * D - 4 * A * E;
  const mpq_class gamma = D * D - 4 * A * f;
  mpq_class pr, qr;
  bool square = false;
  if (alpha != 0) {
    if (perfect_power(alpha, 2, pr)) {
      qr = beta / (2 * pr);
      square = (qr * qr == gamma);
    }
  } else if (beta == 0) {
    square = perfect_power(gamma, 2, qr);
    pr = 0;
  }
  if (!square) {
    // Degenerate conic whose two lines are conjugate over an extension.
    out.status = Irreducibility::Irreducible;
    return out;
  }
  // u = (-(Bv+D) ± (pr v + qr)) / (2A); clear 2A into the factors:
  // 4A * g = (2A u + (B+pr) v + D+qr)(2A u + (B-pr) v + D-qr) / ... times 1/(4A)
  auto lu = [&](const mpq_class& cv, const mpq_class& c0) {
    return swapped ? linear(cv, 2 * A, c0) : linear(2 * A, cv, c0);
  };
  Polynomial f1 = lu(Bq + pr, D + qr);
  Polynomial f2 = lu(Bq - pr, D - qr).scaled(Coeff::rational(mpq_class(1) / (4 * A)));
  out.status = Irreducibility::Reducible;
  out.split = std::make_pair(f1, f2);
  return out;
}

}  // namespace

FactorProbe probe_factor(const Polynomial& g) {
  FactorProbe out;
  if (g.is_zero() || g.is_constant()) return out;
  if (g.total_degree() == 1) {
    out.status = Irreducibility::Irreducible;
    return out;
  }

  const RingPtr& R = g.ring();

  // Single term of degree >= 2: peel off one variable.
  if (g.term_count() == 1) {
    const auto& [m, c] = *g.terms().begin();
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      std::vector<int> e(m.size(), 0);
      e[i] = 1;
      Monomial v(std::move(e));
      out.status = Irreducibility::Reducible;
      out.split = std::make_pair(Polynomial::term(R, v, Coeff::one(c.characteristic())),
                                 divide_by_monomial(g, v));
      return out;
    }
  }

  // Common monomial factor.
  Monomial content = monomial_content(g);
  if (!content.is_unit()) {
    out.status = Irreducibility::Reducible;
    out.split = std::make_pair(
        Polynomial::term(R, content, Coeff::one(R->characteristic())),
        divide_by_monomial(g, content));
    return out;
  }

  if (auto t = two_terms(g)) {
    // monomial - nonzero constant, with some variable of exponent 1:
    // linear and primitive in that variable, hence irreducible.
    if (t->m2.is_unit() && !t->c2.is_zero()) {
      for (std::size_t i = 0; i < t->m1.size(); ++i) {
        if (t->m1[i] == 1) {
          out.status = Irreducibility::Irreducible;
          return out;
        }
      }
    }
    // c1*X^a + c2*Y^b with distinct single variables and gcd(a,b) = 1.
    {
      auto single_var = [](const Monomial& m) -> std::optional<std::size_t> {
        std::optional<std::size_t> v;
        for (std::size_t i = 0; i < m.size(); ++i) {
          if (m[i] == 0) continue;
          if (v) return std::nullopt;
          v = i;
        }
        return v;
      };
      auto v1 = single_var(t->m1), v2 = single_var(t->m2);
      if (v1 && v2 && *v1 != *v2) {
        long a = t->m1[*v1], b = t->m2[*v2];
        if (std::gcd(a, b) == 1) {
          out.status = Irreducibility::Irreducible;
          return out;
        }
      }
    }
    if (auto split = power_difference_split(g, *t)) {
      out.status = Irreducibility::Reducible;
      out.split = split;
      return out;
    }
  }

  std::vector<std::size_t> vs = vars_used(g);

  if (vs.size() == 1 && g.total_degree() <= 4 &&
      R->characteristic() == 0) {
    UPoly p(static_cast<std::size_t>(g.total_degree()) + 1, mpq_class(0));
    for (const auto& [m, c] : g.terms())
      p[static_cast<std::size_t>(m[vs[0]])] = c.value();
    UProbe up = univariate_probe(p);
    out.status = up.status;
    if (up.split)
      out.split = std::make_pair(upoly_to_ring(up.split->first, R, vs[0]),
                                 upoly_to_ring(up.split->second, R, vs[0]));
    return out;
  }

  if (vs.size() <= 2 && g.total_degree() == 2) return conic_probe(g, vs);

  return out;
}

}  // namespace chainlift

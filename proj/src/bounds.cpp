#include "drinfeld/bounds.hpp"

#include <algorithm>
#include <cmath>

#include "drinfeld/errors.hpp"

namespace drinfeld {

namespace {

int sign(const Rational& v) { return v.num() > 0 ? 1 : (v.num() < 0 ? -1 : 0); }

// Sign of u + s sqrt(x), s >= 0.
int sign_of(const Rational& u, const Rational& s, const Rational& x) {
  int su = sign(u);
  if (sign(s) == 0 || sign(x) == 0) return su;
  if (su >= 0) return 1;
  // u < 0 < s sqrt(x): compare s^2 x with u^2.
  return sign(s * s * x - u * u);
}

}  // namespace

int SqrtBound::compare(const Rational& v) const { return sign_of(r - v, s, x); }

int SqrtBound::compare(const SqrtBound& o) const {
  // sign of (r - o.r) + s sqrt(x) - o.s sqrt(o.x)
  Rational u = r - o.r;
  int left = sign_of(u, s, x);  // sign of u + a, a = s sqrt(x)
  bool b_zero = sign(o.s) == 0 || sign(o.x) == 0;
  if (b_zero) return left;
  if (left <= 0) return -1;
  // Both sides positive: compare (u + a)^2 = u^2 + s^2 x + 2 u s sqrt(x) with o.s^2 o.x.
  Rational c = u * u + s * s * x - o.s * o.s * o.x;
  Rational coef = Rational(2) * u * s;
  if (sign(coef) >= 0) return sign_of(c, coef, x);
  return -sign_of(-c, -coef, x);
}

double SqrtBound::approx() const { return r.to_double() + s.to_double() * std::sqrt(x.to_double()); }

std::string SqrtBound::str() const {
  if (sign(s) == 0 || sign(x) == 0) return r.str();
  std::string root = "sqrt(" + x.str() + ")";
  std::string term = s == Rational(1) ? root : s.str() + "*" + root;
  if (sign(r) == 0) return term;
  return term + (sign(r) < 0 ? " - " + (-r).str() : " + " + r.str());
}

long long BoundParams::pn() const {
  long long v = 1;
  for (int i = 0; i < n; ++i) v *= p;
  return v;
}

void BoundParams::validate() const {
  if (p < 2 || n < 0 || d0 < 1 || eps0 < 0) throw ConfigError("invalid bound parameters");
  if (eps0 > d0) throw ConfigError("eps0 must not exceed d0");
}

Rational bound_C1(const BoundParams& bp) {
  bp.validate();
  const long long pn = bp.pn();
  return Rational(pn) * Rational(4 + bp.d0 * pn - bp.d0, 4 + 2 * bp.d0 * pn - 2 * bp.eps0);
}

Rational bound_C2(const BoundParams& bp) {
  bp.validate();
  const long long pn = bp.pn();
  bool first = true;
  Rational best;
  for (long long l = bp.eps0 + 1; l <= 1 + bp.d0 * pn; ++l) {
    long long q = 0, r = 0;
    if (l >= 2) {
      q = (l - 2) / bp.d0;
      r = l - 2 - bp.d0 * q;
    }
    Rational v(2 * pn + bp.d0 * q * (q - 1) + 2 * q * (r + 1), 2 * (l - bp.eps0));
    if (first || v < best) best = v;
    first = false;
  }
  if (first) throw ConfigError("empty range in C2");
  return best;
}

Rational bound_C(const BoundParams& bp) { return std::min(bound_C1(bp), bound_C2(bp)); }

SqrtBound bound_D2(const BoundParams& bp) {
  bp.validate();
  const long long d = bp.d0, e = bp.eps0;
  Rational x(2 * d * bp.pn() + (d - e + 1) * (2 * d - e - 1));
  return {Rational(-3, 2) + Rational(e, d), Rational(1, d), x};
}

SqrtBound bound_D(const BoundParams& bp) {
  SqrtBound d2 = bound_D2(bp);
  Rational c1 = bound_C1(bp);
  return d2.compare(c1) <= 0 ? d2 : SqrtBound::exact(c1);
}

bool gm_condition(const BoundParams& bp) {
  bp.validate();
  bool large = bp.p != 2 || bp.n >= 3 || bp.d0 - bp.eps0 <= 1;
  long long n = bp.n;
  bool small = 2 * bp.pn() > n * (bp.d0 * n + 2 + bp.d0 - 2 * bp.eps0);
  return large && small;
}

}  // namespace drinfeld

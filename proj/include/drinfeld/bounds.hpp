#pragma once

#include <string>

#include "drinfeld/rational.hpp"

namespace drinfeld {

// r + s * sqrt(x) with s >= 0 and x >= 0, compared exactly.
struct SqrtBound {
  Rational r, s, x;

  static SqrtBound exact(const Rational& v) { return {v, Rational(0), Rational(0)}; }
  // Sign of (this - v): -1, 0 or +1.
  int compare(const Rational& v) const;
  int compare(const SqrtBound& o) const;
  double approx() const;
  std::string str() const;
};

// Parameters of the perturbation bounds: prime p, exponent n, elementary
// divisor step d0 and ordinary multiplicity eps0 <= d0.
struct BoundParams {
  long long p = 3;
  int n = 1;
  int d0 = 1;
  int eps0 = 1;

  long long pn() const;
  void validate() const;
};

Rational bound_C1(const BoundParams& bp);
Rational bound_C2(const BoundParams& bp);
Rational bound_C(const BoundParams& bp);
SqrtBound bound_D2(const BoundParams& bp);
// min(C1, D2), exact.
SqrtBound bound_D(const BoundParams& bp);
bool gm_condition(const BoundParams& bp);

}  // namespace drinfeld

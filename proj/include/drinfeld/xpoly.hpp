#pragma once

#include <string>
#include <utility>
#include <vector>

#include "drinfeld/poly.hpp"

namespace drinfeld {

// Polynomial in an outer variable X with coefficients in F_q[t], ascending.
class XPoly {
 public:
  XPoly() = default;
  explicit XPoly(std::vector<Poly> coeffs) : c_(std::move(coeffs)) { normalize(); }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  Poly coeff(int i) const { return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : Poly(); }
  const std::vector<Poly>& coeffs() const { return c_; }

  XPoly& operator+=(const XPoly& o);
  XPoly& operator-=(const XPoly& o);
  friend XPoly operator+(XPoly a, const XPoly& b) { return a += b; }
  friend XPoly operator-(XPoly a, const XPoly& b) { return a -= b; }
  friend XPoly operator*(const XPoly& a, const XPoly& b);
  XPoly operator-() const { return XPoly() - *this; }
  XPoly scaled(const Poly& c) const;

  // X^deg P(1/X) for a given nominal degree (default: actual degree).
  XPoly reversed(int deg = -1) const;
  // P(X + c).
  XPoly taylor_shift(const Poly& c) const;
  Poly eval(const Poly& x) const;

  bool operator==(const XPoly& o) const { return c_ == o.c_; }
  bool operator!=(const XPoly& o) const { return c_ != o.c_; }
  std::string str(const char* var = "X") const;

 private:
  void normalize();
  const Field* first_field() const;
  std::vector<Poly> c_;
};

// Division by a divisor with unit leading coefficient.
std::pair<XPoly, XPoly> divrem_monic(const XPoly& a, const XPoly& b);

}  // namespace drinfeld

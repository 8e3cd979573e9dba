#include "drinfeld/xpoly.hpp"

#include <stdexcept>

namespace drinfeld {

void XPoly::normalize() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

XPoly& XPoly::operator+=(const XPoly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  normalize();
  return *this;
}

XPoly& XPoly::operator-=(const XPoly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  normalize();
  return *this;
}

XPoly operator*(const XPoly& a, const XPoly& b) {
  if (a.is_zero() || b.is_zero()) return XPoly();
  std::vector<Poly> out(a.c_.size() + b.c_.size() - 1);
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (size_t j = 0; j < b.c_.size(); ++j)
      if (!b.c_[j].is_zero()) out[i + j] += a.c_[i] * b.c_[j];
  }
  return XPoly(std::move(out));
}

XPoly XPoly::scaled(const Poly& c) const {
  std::vector<Poly> out(c_);
  for (auto& x : out) x = x * c;
  return XPoly(std::move(out));
}

XPoly XPoly::reversed(int deg) const {
  if (deg < 0) deg = degree();
  if (deg < degree()) throw std::invalid_argument("reversal degree below actual degree");
  std::vector<Poly> out(deg + 1);
  for (int i = 0; i <= degree(); ++i) out[deg - i] = c_[i];
  return XPoly(std::move(out));
}

XPoly XPoly::taylor_shift(const Poly& c) const {
  // Horner in X: P(X + c) = (...(a_n (X+c) + a_{n-1})(X+c) + ...).
  XPoly lin(std::vector<Poly>{c, Poly::constant(*first_field(), 1)});
  XPoly r;
  for (int i = degree(); i >= 0; --i) r = r * lin + XPoly(std::vector<Poly>{c_[i]});
  return r;
}

Poly XPoly::eval(const Poly& x) const {
  Poly r;
  for (int i = degree(); i >= 0; --i) r = r * x + c_[i];
  return r;
}

std::string XPoly::str(const char* var) const {
  if (is_zero()) return "0";
  std::string s;
  for (int i = 0; i <= degree(); ++i) {
    if (c_[i].is_zero()) continue;
    if (!s.empty()) s += " + ";
    s += "(" + c_[i].str() + ")";
    if (i > 0) s += std::string("*") + var + (i > 1 ? "^" + std::to_string(i) : "");
  }
  return s;
}

const Field* XPoly::first_field() const {
  for (const auto& x : c_)
    if (x.field()) return x.field();
  throw std::invalid_argument("XPoly without field");
}

std::pair<XPoly, XPoly> divrem_monic(const XPoly& a, const XPoly& b) {
  if (b.is_zero()) throw std::domain_error("division by zero XPoly");
  Poly lead = b.coeff(b.degree());
  if (lead.degree() != 0) throw std::domain_error("divisor leading coefficient is not a unit");
  const Field& f = *lead.field();
  Poly li = Poly::constant(f, f.inv(lead.lead()));
  std::vector<Poly> r(a.coeffs());
  int db = b.degree();
  if (a.degree() < db) return {XPoly(), a};
  std::vector<Poly> q(a.degree() - db + 1);
  for (int i = a.degree(); i >= db; --i) {
    if (r[i].is_zero()) continue;
    Poly c = r[i] * li;
    q[i - db] = c;
    for (int j = 0; j <= db; ++j) r[i - db + j] -= c * b.coeff(j);
  }
  r.resize(db);
  return {XPoly(std::move(q)), XPoly(std::move(r))};
}

}  // namespace drinfeld

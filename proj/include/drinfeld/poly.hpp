#pragma once

#include <climits>
#include <string>
#include <utility>
#include <vector>

#include "drinfeld/field.hpp"

namespace drinfeld {

// Valuation of the zero element; compares above every finite valuation.
inline constexpr int kInf = INT_MAX;

// Element of F_q[t], ascending coefficients, no trailing zeros.
// A default-constructed Poly is a zero with no field attached; it acts as the
// additive identity for any field.
class Poly {
 public:
  Poly() = default;
  explicit Poly(const Field& f) : f_(&f) {}
  Poly(const Field& f, std::vector<Fq> coeffs);

  static Poly constant(const Field& f, Fq c) { return Poly(f, {c}); }
  static Poly from_int(const Field& f, long long c) { return constant(f, f.from_int(c)); }
  static Poly monomial(const Field& f, Fq c, int deg);
  static Poly t(const Field& f) { return monomial(f, 1, 1); }

  const Field* field() const { return f_; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  Fq coeff(int i) const { return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : 0; }
  Fq lead() const { return c_.empty() ? 0 : c_.back(); }
  const std::vector<Fq>& coeffs() const { return c_; }
  int valuation() const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);

  Poly scaled(Fq c) const;
  Poly shifted(int k) const;    // times t^k, k >= 0
  Poly truncated(int n) const;  // mod t^n
  Poly high(int k) const;       // floor division by t^k
  Poly monic() const;
  Fq eval(Fq x) const;

  bool operator==(const Poly& o) const { return c_ == o.c_; }
  bool operator!=(const Poly& o) const { return c_ != o.c_; }
  // Total order (degree, then coefficients from the top) for use as map keys.
  bool operator<(const Poly& o) const;

  std::string str(const char* var = "t") const;

 private:
  void normalize();
  const Field* f_ = nullptr;
  std::vector<Fq> c_;
};

Poly operator+(Poly a, const Poly& b);
Poly operator-(Poly a, const Poly& b);
Poly operator-(const Poly& a);
Poly operator*(const Poly& a, const Poly& b);

std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b);
Poly operator/(const Poly& a, const Poly& b);
Poly operator%(const Poly& a, const Poly& b);
// Quotient that must be exact; throws InternalError otherwise.
Poly exact_div(const Poly& a, const Poly& b);

Poly gcd(Poly a, Poly b);  // monic, or zero when both are zero
struct ExtGcd {
  Poly g, x, y;  // g = x a + y b, g monic
};
ExtGcd ext_gcd(const Poly& a, const Poly& b);

Poly compose(const Poly& f, const Poly& g);
Poly shift_var(const Poly& f, Fq c);  // f(t + c)
Poly pow(Poly f, long long n);
Poly powmod(Poly f, long long n, const Poly& m);
bool is_irreducible(const Poly& f);

// All polynomials of degree < d, indexed so that index i has base-q digits
// equal to the coefficient indices.
Poly poly_from_index(const Field& f, long long index, int d);
long long poly_index(const Poly& f);
std::vector<Poly> polys_below_degree(const Field& f, int d);

// Accepts sums of terms "c", "t", "c*t", "c t^e", "t^e", "-t", with c an
// integer (reduced mod p, or an element index when e > 1).
Poly parse_poly(const Field& f, const std::string& s);

const Field& common_field(const Poly& a, const Poly& b);

}  // namespace drinfeld

#pragma once

#include <cstdlib>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

namespace drinfeld {

// Exact rational with positive denominator, always in lowest terms.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(long long n) : num_(n), den_(1) {}  // NOLINT(google-explicit-constructor)
  Rational(long long n, long long d) : num_(n), den_(d) {
    if (d == 0) throw std::domain_error("zero denominator");
    normalize();
  }

  long long num() const { return num_; }
  long long den() const { return den_; }
  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
  long long floor() const { return num_ >= 0 ? num_ / den_ : -((-num_ + den_ - 1) / den_); }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return {a.num_ * b.num_, a.den_ * b.den_};
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    return {a.num_ * b.den_, a.den_ * b.num_};
  }
  Rational operator-() const { return {-num_, den_}; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.num_ * b.den_ < b.num_ * a.den_;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  std::string str() const {
    return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
  }
  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  void normalize() {
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    long long g = std::gcd(std::llabs(num_), den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }
  long long num_ = 0;
  long long den_ = 1;
};

}  // namespace drinfeld

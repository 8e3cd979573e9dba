#pragma once

#include <vector>

#include "drinfeld/poly.hpp"

namespace drinfeld {

// Element of F_q[[t]] / t^P.
class TruncSeries {
 public:
  TruncSeries() = default;
  TruncSeries(const Field& f, int prec) : f_(&f), c_(prec, 0) {}
  TruncSeries(const Poly& p, const Field& f, int prec);

  const Field* field() const { return f_; }
  int precision() const { return static_cast<int>(c_.size()); }
  Fq coeff(int i) const { return c_[i]; }
  Fq& coeff(int i) { return c_[i]; }

  // First nonzero index, or precision() when the element is 0 mod t^P.
  int valuation() const;
  bool is_zero() const { return valuation() == precision(); }
  bool is_unit() const { return !c_.empty() && c_[0] != 0; }

  TruncSeries operator+(const TruncSeries& o) const;
  TruncSeries operator-(const TruncSeries& o) const;
  TruncSeries operator-() const;
  TruncSeries operator*(const TruncSeries& o) const;
  TruncSeries scaled(Fq c) const;
  TruncSeries inverse() const;  // unit required
  // Division by t^k; the top k coefficients become 0 (they are unknown).
  TruncSeries shifted_down(int k) const;
  TruncSeries shifted_up(int k) const;
  TruncSeries with_precision(int prec) const;

  Poly to_poly() const;
  bool operator==(const TruncSeries& o) const { return c_ == o.c_; }

 private:
  const Field* f_ = nullptr;
  std::vector<Fq> c_;
};

}  // namespace drinfeld

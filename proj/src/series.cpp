#include "drinfeld/series.hpp"

#include <cstdint>
#include <stdexcept>

namespace drinfeld {

TruncSeries::TruncSeries(const Poly& p, const Field& f, int prec) : f_(&f), c_(prec, 0) {
  for (int i = 0; i < prec && i <= p.degree(); ++i) c_[i] = p.coeff(i);
}

int TruncSeries::valuation() const {
  for (size_t i = 0; i < c_.size(); ++i)
    if (c_[i]) return static_cast<int>(i);
  return precision();
}

TruncSeries TruncSeries::operator+(const TruncSeries& o) const {
  TruncSeries r(*this);
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = f_->add(c_[i], o.c_[i]);
  return r;
}

TruncSeries TruncSeries::operator-(const TruncSeries& o) const {
  TruncSeries r(*this);
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = f_->sub(c_[i], o.c_[i]);
  return r;
}

TruncSeries TruncSeries::operator-() const {
  TruncSeries r(*this);
  for (auto& x : r.c_) x = f_->neg(x);
  return r;
}

TruncSeries TruncSeries::operator*(const TruncSeries& o) const {
  int n = precision();
  TruncSeries r(*f_, n);
  if (f_->is_prime()) {
    std::vector<std::uint64_t> acc(n, 0);
    for (int i = 0; i < n; ++i) {
      if (!c_[i]) continue;
      std::uint64_t a = c_[i];
      for (int j = 0; i + j < n; ++j) acc[i + j] += a * o.c_[j];
    }
    for (int i = 0; i < n; ++i) r.c_[i] = static_cast<Fq>(acc[i] % f_->p());
  } else {
    for (int i = 0; i < n; ++i) {
      if (!c_[i]) continue;
      for (int j = 0; i + j < n; ++j) r.c_[i + j] = f_->add(r.c_[i + j], f_->mul(c_[i], o.c_[j]));
    }
  }
  return r;
}

TruncSeries TruncSeries::scaled(Fq c) const {
  TruncSeries r(*this);
  for (auto& x : r.c_) x = f_->mul(x, c);
  return r;
}

TruncSeries TruncSeries::inverse() const {
  if (!is_unit()) throw std::domain_error("inverse of a non-unit series");
  int n = precision();
  TruncSeries r(*f_, n);
  Fq i0 = f_->inv(c_[0]);
  r.c_[0] = i0;
  for (int k = 1; k < n; ++k) {
    Fq s = 0;
    for (int j = 1; j <= k; ++j) s = f_->add(s, f_->mul(c_[j], r.c_[k - j]));
    r.c_[k] = f_->neg(f_->mul(s, i0));
  }
  return r;
}

TruncSeries TruncSeries::shifted_down(int k) const {
  TruncSeries r(*f_, precision());
  for (int i = k; i < precision(); ++i) r.c_[i - k] = c_[i];
  return r;
}

TruncSeries TruncSeries::shifted_up(int k) const {
  TruncSeries r(*f_, precision());
  for (int i = 0; i + k < precision(); ++i) r.c_[i + k] = c_[i];
  return r;
}

TruncSeries TruncSeries::with_precision(int prec) const {
  TruncSeries r(*f_, prec);
  for (int i = 0; i < prec && i < precision(); ++i) r.c_[i] = c_[i];
  return r;
}

Poly TruncSeries::to_poly() const { return Poly(*f_, c_); }

}  // namespace drinfeld

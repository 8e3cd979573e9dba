#include "drinfeld/poly.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <stdexcept>

#include "drinfeld/errors.hpp"

namespace drinfeld {

const Field& common_field(const Poly& a, const Poly& b) {
  if (a.field()) {
    if (b.field() && b.field() != a.field()) throw std::invalid_argument("mixed fields");
    return *a.field();
  }
  if (b.field()) return *b.field();
  throw std::invalid_argument("polynomial without field");
}

Poly::Poly(const Field& f, std::vector<Fq> coeffs) : f_(&f), c_(std::move(coeffs)) { normalize(); }

void Poly::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::monomial(const Field& f, Fq c, int deg) {
  if (c == 0) return Poly(f);
  std::vector<Fq> v(deg + 1, 0);
  v[deg] = c;
  return Poly(f, std::move(v));
}

int Poly::valuation() const {
  for (size_t i = 0; i < c_.size(); ++i)
    if (c_[i]) return static_cast<int>(i);
  return kInf;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.is_zero()) return *this;
  const Field& f = common_field(*this, o);
  f_ = &f;
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), 0);
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] = f.add(c_[i], o.c_[i]);
  normalize();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.is_zero()) return *this;
  const Field& f = common_field(*this, o);
  f_ = &f;
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), 0);
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] = f.sub(c_[i], o.c_[i]);
  normalize();
  return *this;
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly operator+(Poly a, const Poly& b) { return a += b; }
Poly operator-(Poly a, const Poly& b) { return a -= b; }
Poly operator-(const Poly& a) { return Poly() - a; }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) {
    if (a.field()) return Poly(*a.field());
    if (b.field()) return Poly(*b.field());
    return Poly();
  }
  const Field& f = common_field(a, b);
  const auto& x = a.coeffs();
  const auto& y = b.coeffs();
  size_t n = x.size(), m = y.size();
  std::vector<Fq> out(n + m - 1, 0);
  if (f.is_prime()) {
    std::vector<std::uint64_t> acc(n + m - 1, 0);
    for (size_t i = 0; i < n; ++i) {
      std::uint64_t xi = x[i];
      if (!xi) continue;
      std::uint64_t* row = acc.data() + i;
      for (size_t j = 0; j < m; ++j) row[j] += xi * y[j];
    }
    const std::uint64_t p = static_cast<std::uint64_t>(f.p());
    for (size_t i = 0; i < acc.size(); ++i) out[i] = static_cast<Fq>(acc[i] % p);
  } else {
    for (size_t i = 0; i < n; ++i) {
      if (!x[i]) continue;
      for (size_t j = 0; j < m; ++j) out[i + j] = f.add(out[i + j], f.mul(x[i], y[j]));
    }
  }
  return Poly(f, std::move(out));
}

Poly Poly::scaled(Fq c) const {
  if (is_zero()) return *this;
  std::vector<Fq> v(c_);
  for (auto& x : v) x = f_->mul(x, c);
  return Poly(*f_, std::move(v));
}

Poly Poly::shifted(int k) const {
  if (is_zero() || k == 0) return *this;
  std::vector<Fq> v(k, 0);
  v.insert(v.end(), c_.begin(), c_.end());
  return Poly(*f_, std::move(v));
}

Poly Poly::truncated(int n) const {
  if (static_cast<int>(c_.size()) <= n) return *this;
  Poly r(*this);
  r.c_.resize(std::max(n, 0));
  r.normalize();
  return r;
}

Poly Poly::high(int k) const {
  if (k <= 0) return *this;
  if (static_cast<int>(c_.size()) <= k) return f_ ? Poly(*f_) : Poly();
  return Poly(*f_, std::vector<Fq>(c_.begin() + k, c_.end()));
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return scaled(f_->inv(lead()));
}

Fq Poly::eval(Fq x) const {
  Fq r = 0;
  for (size_t i = c_.size(); i-- > 0;) r = f_->add(f_->mul(r, x), c_[i]);
  return r;
}

bool Poly::operator<(const Poly& o) const {
  if (c_.size() != o.c_.size()) return c_.size() < o.c_.size();
  for (size_t i = c_.size(); i-- > 0;)
    if (c_[i] != o.c_[i]) return c_[i] < o.c_[i];
  return false;
}

std::string Poly::str(const char* var) const {
  if (is_zero()) return "0";
  std::string s;
  for (int i = degree(); i >= 0; --i) {
    Fq c = c_[i];
    if (!c) continue;
    if (!s.empty()) s += " + ";
    std::string cs = f_->to_string(c);
    if (i == 0) {
      s += cs;
    } else {
      if (c != 1) s += cs + "*";
      s += var;
      if (i > 1) s += "^" + std::to_string(i);
    }
  }
  return s;
}

std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  const Field& f = *b.field();
  if (a.degree() < b.degree()) return {Poly(f), a.field() ? a : Poly(f)};
  std::vector<Fq> r(a.coeffs());
  int db = b.degree();
  std::vector<Fq> q(a.degree() - db + 1, 0);
  Fq li = f.inv(b.lead());
  const auto& bc = b.coeffs();
  for (int i = a.degree(); i >= db; --i) {
    Fq c = r[i];
    if (!c) continue;
    c = f.mul(c, li);
    q[i - db] = c;
    for (int j = 0; j <= db; ++j) r[i - db + j] = f.sub(r[i - db + j], f.mul(c, bc[j]));
  }
  r.resize(db);
  return {Poly(f, std::move(q)), Poly(f, std::move(r))};
}

Poly operator/(const Poly& a, const Poly& b) { return divrem(a, b).first; }
Poly operator%(const Poly& a, const Poly& b) { return divrem(a, b).second; }

Poly exact_div(const Poly& a, const Poly& b) {
  auto [q, r] = divrem(a, b);
  if (!r.is_zero()) throw InternalError("inexact polynomial division");
  return q;
}

Poly gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

ExtGcd ext_gcd(const Poly& a, const Poly& b) {
  const Field& f = common_field(a, b);
  Poly r0 = a, r1 = b;
  Poly s0 = Poly::constant(f, 1), s1(f);
  Poly t0(f), t1 = Poly::constant(f, 1);
  while (!r1.is_zero()) {
    auto [q, r] = divrem(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    Poly t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  Fq li = f.inv(r0.lead());
  return {r0.scaled(li), s0.scaled(li), t0.scaled(li)};
}

Poly compose(const Poly& f, const Poly& g) {
  if (f.is_zero()) return f;
  const Field& fld = *f.field();
  Poly r(fld);
  for (int i = f.degree(); i >= 0; --i) r = r * g + Poly::constant(fld, f.coeff(i));
  return r;
}

Poly shift_var(const Poly& f, Fq c) {
  if (f.is_zero()) return f;
  const Field& fld = *f.field();
  return compose(f, Poly(fld, {c, 1}));
}

Poly pow(Poly f, long long n) {
  Poly r = Poly::constant(*f.field(), 1);
  while (n > 0) {
    if (n & 1) r = r * f;
    f = f * f;
    n >>= 1;
  }
  return r;
}

Poly powmod(Poly f, long long n, const Poly& m) {
  Poly r = Poly::constant(*m.field(), 1) % m;
  f = f % m;
  while (n > 0) {
    if (n & 1) r = (r * f) % m;
    f = (f * f) % m;
    n >>= 1;
  }
  return r;
}

bool is_irreducible(const Poly& f) {
  if (f.degree() < 1) return false;
  const Field& fld = *f.field();
  for (int d = 1; 2 * d <= f.degree(); ++d) {
    long long count = 1;
    for (int i = 0; i < d; ++i) count *= fld.q();
    for (long long idx = 0; idx < count; ++idx) {
      Poly g = poly_from_index(fld, idx, d) + Poly::monomial(fld, 1, d);
      if ((f % g).is_zero()) return false;
    }
  }
  return true;
}

Poly poly_from_index(const Field& f, long long index, int d) {
  std::vector<Fq> v(d, 0);
  for (int i = 0; i < d; ++i) {
    v[i] = static_cast<Fq>(index % f.q());
    index /= f.q();
  }
  return Poly(f, std::move(v));
}

long long poly_index(const Poly& f) {
  long long x = 0;
  for (int i = f.degree(); i >= 0; --i) x = x * f.field()->q() + f.coeff(i);
  return x;
}

std::vector<Poly> polys_below_degree(const Field& f, int d) {
  long long count = 1;
  for (int i = 0; i < d; ++i) count *= f.q();
  std::vector<Poly> out;
  out.reserve(count);
  for (long long i = 0; i < count; ++i) out.push_back(poly_from_index(f, i, d));
  return out;
}

Poly parse_poly(const Field& f, const std::string& input) {
  std::string s;
  for (char ch : input)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw ConfigError("empty polynomial");
  Poly result(f);
  size_t i = 0;
  auto bad = [&]() { return ConfigError("cannot parse polynomial '" + input + "'"); };
  auto read_int = [&](long long& out) {
    size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start) return false;
    out = std::stoll(s.substr(start, i - start));
    return true;
  };
  while (i < s.size()) {
    bool negative = false;
    if (s[i] == '+' || s[i] == '-') {
      negative = s[i] == '-';
      ++i;
    } else if (i != 0) {
      throw bad();
    }
    Fq coeff = 1;
    long long num = 0;
    bool has_num = read_int(num);
    if (has_num) {
      if (f.is_prime()) {
        coeff = f.from_int(num);
      } else {
        if (num < 0 || num >= f.q()) throw bad();
        coeff = static_cast<Fq>(num);
      }
      if (i < s.size() && s[i] == '*') ++i;
    }
    int exponent = 0;
    if (i < s.size() && s[i] == 't') {
      ++i;
      exponent = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        long long e = 0;
        if (!read_int(e)) throw bad();
        exponent = static_cast<int>(e);
      }
    } else if (!has_num) {
      throw bad();
    }
    if (negative) coeff = f.neg(coeff);
    result += Poly::monomial(f, coeff, exponent);
  }
  return result;
}

}  // namespace drinfeld

#include "drinfeld/field.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <tuple>

#include "drinfeld/errors.hpp"

namespace drinfeld {

bool is_prime_number(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

using Vec = std::vector<int>;

void trim(Vec& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo a monic b over F_p.
Vec mod_p(Vec a, const Vec& b, int p) {
  trim(a);
  int db = static_cast<int>(b.size()) - 1;
  while (static_cast<int>(a.size()) - 1 >= db) {
    int c = a.back();
    int shift = static_cast<int>(a.size()) - 1 - db;
    for (int i = 0; i <= db; ++i) a[shift + i] = ((a[shift + i] - c * b[i]) % p + p) % p;
    trim(a);
  }
  return a;
}

bool irreducible_over_fp(const Vec& f, int p) {
  int deg = static_cast<int>(f.size()) - 1;
  // Trial division by every monic polynomial of degree 1..deg/2.
  for (int d = 1; 2 * d <= deg; ++d) {
    long long count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (long long idx = 0; idx < count; ++idx) {
      Vec g(d + 1, 0);
      long long x = idx;
      for (int i = 0; i < d; ++i) {
        g[i] = static_cast<int>(x % p);
        x /= p;
      }
      g[d] = 1;
      if (mod_p(f, g, p).empty()) return false;
    }
  }
  return true;
}

Vec default_modulus(int p, int e) {
  long long count = 1;
  for (int i = 0; i < e; ++i) count *= p;
  for (long long idx = 0; idx < count; ++idx) {
    Vec f(e + 1, 0);
    long long x = idx;
    for (int i = 0; i < e; ++i) {
      f[i] = static_cast<int>(x % p);
      x /= p;
    }
    f[e] = 1;
    if (irreducible_over_fp(f, p)) return f;
  }
  throw InternalError("no irreducible polynomial found");
}

}  // namespace

const Field& Field::get(const FieldSpec& spec) {
  if (!is_prime_number(spec.p)) throw ConfigError("field characteristic must be prime");
  if (spec.e < 1) throw ConfigError("extension degree must be >= 1");
  long long q = 1;
  for (int i = 0; i < spec.e; ++i) q *= spec.p;
  if (q > 256) throw ConfigError("field size above 256 is not supported");

  Vec modulus;
  if (spec.e > 1) {
    modulus = spec.modulus.empty() ? default_modulus(spec.p, spec.e) : spec.modulus;
    if (static_cast<int>(modulus.size()) != spec.e + 1 || modulus.back() != 1)
      throw ConfigError("field modulus must be monic of degree e");
    for (int c : modulus)
      if (c < 0 || c >= spec.p) throw ConfigError("field modulus coefficients must lie in [0,p)");
    if (!irreducible_over_fp(modulus, spec.p)) throw ConfigError("field modulus is reducible");
  }

  static std::mutex mu;
  static std::map<std::tuple<int, int, Vec>, std::unique_ptr<Field>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_tuple(spec.p, spec.e, modulus);
  auto it = cache.find(key);
  if (it != cache.end()) return *it->second;
  auto* f = new Field(spec.p, spec.e, modulus);
  cache.emplace(key, std::unique_ptr<Field>(f));
  return *f;
}

Field::Field(int p, int e, std::vector<int> modulus)
    : p_(p), e_(e), q_(1), modulus_(std::move(modulus)) {
  for (int i = 0; i < e; ++i) q_ *= p;
  add_.resize(q_ * q_);
  mul_.resize(q_ * q_);
  neg_.resize(q_);
  inv_.assign(q_, 0);
  std::vector<Vec> c(q_);
  for (int a = 0; a < q_; ++a) c[a] = coords(static_cast<Fq>(a));
  for (int a = 0; a < q_; ++a) {
    Vec n(e_);
    for (int i = 0; i < e_; ++i) n[i] = (p_ - c[a][i]) % p_;
    neg_[a] = from_coords(n);
    for (int b = 0; b < q_; ++b) {
      Vec s(e_);
      for (int i = 0; i < e_; ++i) s[i] = (c[a][i] + c[b][i]) % p_;
      add_[a * q_ + b] = from_coords(s);
      Vec prod(2 * e_ - 1, 0);
      for (int i = 0; i < e_; ++i)
        for (int j = 0; j < e_; ++j) prod[i + j] = (prod[i + j] + c[a][i] * c[b][j]) % p_;
      if (e_ > 1) prod = mod_p(prod, modulus_, p_);
      prod.resize(e_, 0);
      mul_[a * q_ + b] = from_coords(prod);
    }
  }
  for (int a = 1; a < q_; ++a)
    for (int b = 1; b < q_; ++b)
      if (mul_[a * q_ + b] == 1) inv_[a] = static_cast<Fq>(b);
  for (int g = 1; g < q_; ++g) {
    int order = 1;
    Fq x = static_cast<Fq>(g);
    while (x != 1) {
      x = mul(x, static_cast<Fq>(g));
      ++order;
    }
    if (order == q_ - 1) {
      gen_ = static_cast<Fq>(g);
      break;
    }
  }
}

Fq Field::inv(Fq a) const {
  if (a == 0) throw std::domain_error("inverse of zero in F_q");
  return inv_[a];
}

Fq Field::pow(Fq a, long long n) const {
  if (n < 0) {
    a = inv(a);
    n = -n;
  }
  Fq r = 1;
  while (n > 0) {
    if (n & 1) r = mul(r, a);
    a = mul(a, a);
    n >>= 1;
  }
  return r;
}

Fq Field::from_int(long long n) const {
  long long r = ((n % p_) + p_) % p_;
  return static_cast<Fq>(r);  // lies in the prime subfield: coords (r, 0, ...)
}

std::vector<int> Field::coords(Fq a) const {
  Vec c(e_);
  int x = a;
  for (int i = 0; i < e_; ++i) {
    c[i] = x % p_;
    x /= p_;
  }
  return c;
}

Fq Field::from_coords(const std::vector<int>& c) const {
  int x = 0;
  for (int i = e_ - 1; i >= 0; --i) x = x * p_ + (i < static_cast<int>(c.size()) ? c[i] : 0);
  return static_cast<Fq>(x);
}

std::string Field::to_string(Fq a) const {
  if (e_ == 1) return std::to_string(a);
  auto c = coords(a);
  std::string s = "[";
  for (int i = 0; i < e_; ++i) s += (i ? "," : "") + std::to_string(c[i]);
  return s + "]";
}

}  // namespace drinfeld

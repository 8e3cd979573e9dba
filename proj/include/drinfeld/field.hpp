#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace drinfeld {

// Field elements are indices 0..q-1; index = sum coords[i] * p^i.
using Fq = std::uint16_t;

struct FieldSpec {
  int p = 3;
  int e = 1;
  // Ascending coefficients of a monic irreducible polynomial of degree e over
  // F_p. Empty means "pick the smallest irreducible" (ignored when e == 1).
  std::vector<int> modulus;
};

class Field {
 public:
  // Interned: repeated calls with the same spec return the same object, so
  // pointer equality is field equality.
  static const Field& get(const FieldSpec& spec);
  static const Field& prime(int p) { return get(FieldSpec{p, 1, {}}); }

  int p() const { return p_; }
  int e() const { return e_; }
  int q() const { return q_; }
  bool is_prime() const { return e_ == 1; }
  const std::vector<int>& modulus() const { return modulus_; }

  Fq add(Fq a, Fq b) const { return add_[a * q_ + b]; }
  Fq sub(Fq a, Fq b) const { return add_[a * q_ + neg_[b]]; }
  Fq mul(Fq a, Fq b) const { return mul_[a * q_ + b]; }
  Fq neg(Fq a) const { return neg_[a]; }
  Fq inv(Fq a) const;  // throws on zero
  Fq pow(Fq a, long long n) const;

  // Integers map through Z -> F_p -> F_q.
  Fq from_int(long long n) const;
  std::vector<int> coords(Fq a) const;
  Fq from_coords(const std::vector<int>& c) const;

  // Multiplicative generator of F_q^x (smallest index).
  Fq generator() const { return gen_; }

  std::string to_string(Fq a) const;

 private:
  Field(int p, int e, std::vector<int> modulus);

  int p_, e_, q_;
  std::vector<int> modulus_;
  std::vector<Fq> add_, mul_, neg_, inv_;
  Fq gen_ = 1;
};

bool is_prime_number(long long n);

}  // namespace drinfeld

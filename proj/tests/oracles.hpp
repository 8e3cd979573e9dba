// Brute-force reference implementations used only by the tests. They share
// nothing with the library algorithms beyond field arithmetic.
#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <vector>

#include "drinfeld/linalg.hpp"

namespace oracle {

using namespace drinfeld;

inline Poly random_poly(const Field& f, int maxdeg, std::mt19937_64& rng) {
  std::vector<Fq> c(maxdeg + 1);
  for (auto& x : c) x = static_cast<Fq>(rng() % f.q());
  return Poly(f, c);
}

inline PolyMatrix random_matrix(const Field& f, int n, int maxdeg, std::mt19937_64& rng) {
  PolyMatrix m = zero_matrix(f, n, n);
  for (auto& x : m.data()) x = random_poly(f, maxdeg, rng);
  return m;
}

// Permutations of 0..n-1 with their signs.
inline std::vector<std::pair<std::vector<int>, int>> permutations(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::pair<std::vector<int>, int>> out;
  do {
    int inv = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) inv += p[i] > p[j];
    out.emplace_back(p, inv % 2 ? -1 : 1);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// Bivariate polynomial in (t, X) with F_p coefficients, keyed by (degX, degt).
using Bi = std::map<std::pair<int, int>, int>;

inline Bi bi_mul(const Bi& a, const Bi& b, int p) {
  Bi out;
  for (const auto& [ka, va] : a)
    for (const auto& [kb, vb] : b) {
      auto& c = out[{ka.first + kb.first, ka.second + kb.second}];
      c = (c + va * vb) % p;
    }
  return out;
}

// det(I - M X) by the Leibniz formula; returns coefficient [l][i] of X^l t^i.
inline std::vector<std::vector<int>> leibniz_reciprocal(const PolyMatrix& m, int p) {
  const int n = m.rows();
  std::vector<Bi> entries(n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Bi e;
      if (i == j) e[{0, 0}] = 1;
      for (int d = 0; d <= m(i, j).degree(); ++d)
        if (m(i, j).coeff(d)) e[{1, d}] = (p - m(i, j).coeff(d)) % p;
      entries[i * n + j] = e;
    }
  Bi total;
  for (const auto& [perm, sign] : permutations(n)) {
    Bi term{{{0, 0}, 1}};
    for (int i = 0; i < n; ++i) term = bi_mul(term, entries[i * n + perm[i]], p);
    for (const auto& [k, v] : term) {
      auto& c = total[k];
      c = ((c + sign * v) % p + p) % p;
    }
  }
  std::vector<std::vector<int>> out(n + 1);
  for (const auto& [k, v] : total) {
    if (!v) continue;
    auto& row = out[k.first];
    if (static_cast<int>(row.size()) <= k.second) row.resize(k.second + 1, 0);
    row[k.second] = v;
  }
  for (auto& row : out)
    while (!row.empty() && row.back() == 0) row.pop_back();
  return out;
}

inline Poly leibniz_det(const PolyMatrix& m) {
  const Field& f = *m(0, 0).field();
  Poly total(f);
  for (const auto& [perm, sign] : permutations(m.rows())) {
    Poly term = Poly::constant(f, 1);
    for (int i = 0; i < m.rows(); ++i) term = term * m(i, perm[i]);
    total = sign > 0 ? total + term : total - term;
  }
  return total;
}

// Slope multiplicities of the lower hull, from the pointwise minimum over all
// chords (exact rational comparison).
inline std::map<Rational, int> brute_hull(const std::vector<std::pair<int, int>>& pts) {
  auto height = [&](int x) {
    Rational best(1LL << 40);
    for (size_t i = 0; i < pts.size(); ++i)
      for (size_t j = i; j < pts.size(); ++j) {
        auto [xi, yi] = pts[i];
        auto [xj, yj] = pts[j];
        if (xi > x || xj < x) continue;
        Rational h = xi == xj ? Rational(yi) : Rational(yi) + Rational((yj - yi) * (x - xi), xj - xi);
        best = std::min(best, h);
      }
    return best;
  };
  std::map<Rational, int> mult;
  for (int x = pts.front().first; x < pts.back().first; ++x) mult[height(x + 1) - height(x)] += 1;
  return mult;
}

// Elementary divisors from determinantal divisors: s_1 + ... + s_k is the
// minimal valuation of the k x k minors.
inline std::vector<int> minors_eldiv(const PolyMatrix& m) {
  const int n = m.rows();
  std::vector<int> dk(n + 1, 0);
  for (int k = 1; k <= n; ++k) {
    int best = kInf;
    std::vector<int> sel(n, 0);
    std::fill(sel.begin(), sel.begin() + k, 1);
    std::vector<std::vector<int>> subsets;
    do {
      std::vector<int> s;
      for (int i = 0; i < n; ++i)
        if (sel[i]) s.push_back(i);
      subsets.push_back(s);
    } while (std::prev_permutation(sel.begin(), sel.end()));
    for (const auto& rs : subsets)
      for (const auto& cs : subsets) {
        PolyMatrix sub = zero_matrix(*m(0, 0).field(), k, k);
        for (int i = 0; i < k; ++i)
          for (int j = 0; j < k; ++j) sub(i, j) = m(rs[i], cs[j]);
        best = std::min(best, leibniz_det(sub).valuation());
      }
    dk[k] = best;
  }
  std::vector<int> s;
  for (int k = 1; k <= n; ++k) s.push_back(dk[k] == kInf ? kInf : dk[k] - dk[k - 1]);
  return s;
}

// prod over (alpha, beta) of (Z - (beta - alpha)), as an XPoly in Z.
inline XPoly product_of_differences(const std::vector<Poly>& alphas, const std::vector<Poly>& betas) {
  const Field& f = *alphas.front().field();
  XPoly out({Poly::constant(f, 1)});
  for (const auto& a : alphas)
    for (const auto& b : betas) out = out * XPoly({a - b, Poly::constant(f, 1)});
  return out;
}

inline XPoly poly_from_roots(const std::vector<Poly>& roots) {
  const Field& f = *roots.front().field();
  XPoly out({Poly::constant(f, 1)});
  for (const auto& r : roots) out = out * XPoly({-r, Poly::constant(f, 1)});
  return out;
}

}  // namespace oracle

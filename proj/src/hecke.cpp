#include "drinfeld/hecke.hpp"

#include <algorithm>

#include "drinfeld/errors.hpp"
#include "drinfeld/linalg.hpp"

namespace drinfeld {

namespace {

// Coefficients (by power of X) of (uX + vY)^e for e = 0..n.
std::vector<std::vector<Poly>> binomial_powers(const Poly& u, const Poly& v, int n, const Field& f) {
  std::vector<std::vector<Poly>> out(n + 1);
  out[0] = {Poly::constant(f, 1)};
  for (int e = 1; e <= n; ++e) {
    std::vector<Poly> next(e + 1, Poly(f));
    for (int x = 0; x < e; ++x) {
      next[x + 1] += out[e - 1][x] * u;
      next[x] += out[e - 1][x] * v;
    }
    out[e] = std::move(next);
  }
  return out;
}

}  // namespace

PolyMatrix vk_matrix(int k, const Mat2& g) {
  if (k < 2) throw ConfigError("weight must be at least 2");
  const Field& f = g.field();
  const int n = k - 2;
  auto p1 = binomial_powers(g.a, g.c, n, f);
  auto p2 = binomial_powers(g.b, g.d, n, f);
  PolyMatrix m = zero_matrix(f, n + 1, n + 1);
  for (int s = 0; s <= n; ++s)
    for (int r = 0; r <= n; ++r) {
      Poly acc(f);
      for (int x = std::max(0, r - (n - s)); x <= std::min(s, r); ++x) acc += p1[s][x] * p2[n - s][r - x];
      m(s, r) = std::move(acc);
    }
  return m;
}

CocycleEngine::CocycleEngine(const QuotientData& qd, int k, size_t cache_cap) : qd_(&qd), k_(k), cap_(cache_cap) {
  if (k < 2) throw ConfigError("weight must be at least 2");
}

void CocycleEngine::add_into(Expansion& acc, const Expansion& x, int sign) const {
  for (const auto& [j, m] : x.blocks) {
    PolyMatrix term = sign > 0 ? m : scaled(m, Poly::from_int(qd_->field(), -1));
    auto it = acc.blocks.find(j);
    if (it == acc.blocks.end())
      acc.blocks.emplace(j, std::move(term));
    else
      it->second = it->second + term;
  }
}

// h . e_0 with h_21 a unit mod t lies in the Gamma_1(t)-orbit of e_pi.
Expansion CocycleEngine::stable_term(const Mat2& h) {
  const Field& f = qd_->field();
  Mat2 hi = h.adjugate();
  Fq r = hi.c.coeff(0), p = hi.a.coeff(0);
  Fq a = f.neg(r);
  Mat2 s{Poly::constant(f, a), Poly::constant(f, p), Poly(f), Poly::constant(f, f.inv(a))};
  Mat2 gamma = qd_->w() * s * hi;  // gamma . (h e_0) = e_pi
  if (!qd_->member_gamma1t(gamma)) throw InternalError("stable edge transport left Gamma_1(t)");
  Mat2 gi = gamma.adjugate();
  int j = qd_->coset_of(gi);
  // gamma^{-1} = delta y_j and c(h e_0) = delta o c(f_j).
  Expansion out;
  out.blocks.emplace(j, vk_matrix(k_, qd_->coset_reps()[j] * gamma));
  return out;
}

Expansion CocycleEngine::expand(const OrientedEdge& e) {
  auto hit = memo_.find(e);
  if (hit != memo_.end()) return hit->second;
  const Field& f = qd_->field();
  EdgeReduction red = reduce_edge(f, e);
  Mat2 h = red.g.adjugate();  // e = sign * h e_i
  Expansion body;
  if (red.i >= 1) {
    // Harmonicity at h v_i: the edge toward v_{i+1} carries the sum of the
    // q edges coming up from the v_{i-1} side.
    for (int c = 0; c < f.q(); ++c) {
      Mat2 u{Poly::constant(f, 1), Poly::monomial(f, static_cast<Fq>(c), red.i), Poly(f), Poly::constant(f, 1)};
      Mat2 hu = h * u;
      add_into(body, expand(act(hu, standard_edge(f, red.i - 1))), 1);
    }
  } else if (h.c.coeff(0) != 0) {
    body = stable_term(h);
  } else {
    for (int c = 0; c < f.q(); ++c) {
      Mat2 sg{Poly::constant(f, static_cast<Fq>(c)), Poly::from_int(f, -1), Poly::constant(f, 1), Poly(f)};
      Mat2 hs = h * sg;
      if (hs.c.coeff(0) == 0) throw InternalError("sibling edge is not stable");
      add_into(body, stable_term(hs), -1);
    }
  }
  Expansion out;
  add_into(out, body, red.sign);
  if (memo_.size() >= cap_) memo_.clear();
  memo_.emplace(e, out);
  return out;
}

std::vector<Poly> CocycleEngine::evaluate(const std::vector<std::vector<Poly>>& values, const OrientedEdge& e) {
  const Field& f = qd_->field();
  std::vector<Poly> out(k_ - 1, Poly(f));
  for (const auto& [j, m] : expand(e).blocks) {
    std::vector<Poly> part = m * values.at(j);
    for (int s = 0; s < k_ - 1; ++s) out[s] += part[s];
  }
  return out;
}

PolyMatrix CocycleEngine::operator_matrix(const std::vector<Mat2>& xs) {
  const Field& f = qd_->field();
  const int d = qd_->d(), n = k_ - 1;
  PolyMatrix out = zero_matrix(f, d * n, d * n);
  for (int l = 0; l < d; ++l)
    for (const Mat2& x : xs) {
      PolyMatrix rx = vk_matrix(k_, x);
      for (const auto& [j, m] : expand(act(x, qd_->basis_edges()[l])).blocks) {
        PolyMatrix b = rx * m;
        for (int s = 0; s < n; ++s)
          for (int r = 0; r < n; ++r) out(s * d + l, r * d + j) += b(s, r);
      }
    }
  return out;
}

PolyMatrix hecke_matrix(CocycleEngine& eng, const Poly& q) { return eng.operator_matrix(eng.quotient().hecke_cosets(q)); }

PolyMatrix hecke_matrix(const QuotientData& qd, int k, const Poly& q) {
  CocycleEngine eng(qd, k);
  return hecke_matrix(eng, q);
}

PolyMatrix diamond_matrix(CocycleEngine& eng, Fq lambda) {
  if (lambda == 0) throw ConfigError("diamond operator needs a nonzero lambda");
  return eng.operator_matrix({eng.quotient().eta(lambda)});
}

PolyMatrix chi_projector(CocycleEngine& eng, int c) {
  const Field& f = eng.quotient().field();
  const int q1 = f.q() - 1;
  if (c < 0 || c >= q1) throw ConfigError("character exponent must lie in [0, q-2]");
  PolyMatrix out = zero_matrix(f, eng.dim(), eng.dim());
  for (int l = 1; l <= q1; ++l) {
    Fq lam = static_cast<Fq>(l);
    Fq coef = f.neg(f.inv(f.pow(lam, c)));
    out = out + scaled(diamond_matrix(eng, lam), Poly::constant(f, coef));
  }
  return out;
}

PolyMatrix image_basis(const PolyMatrix& proj) {
  const int n = proj.rows();
  const Field& f = proj.data().empty() ? Field::prime(2) : *proj(0, 0).field();
  std::vector<std::vector<Poly>> work;
  for (int c = 0; c < proj.cols(); ++c) {
    std::vector<Poly> col(n);
    bool nz = false;
    for (int r = 0; r < n; ++r) {
      col[r] = proj(r, c);
      nz = nz || !col[r].is_zero();
    }
    if (nz) work.push_back(std::move(col));
  }
  std::vector<std::vector<Poly>> basis;
  for (int row = 0; row < n && !work.empty(); ++row) {
    while (true) {
      int piv = -1;
      for (size_t c = 0; c < work.size(); ++c)
        if (!work[c][row].is_zero() && (piv < 0 || work[c][row].degree() < work[piv][row].degree()))
          piv = static_cast<int>(c);
      if (piv < 0) break;
      bool alone = true;
      for (size_t c = 0; c < work.size(); ++c) {
        if (static_cast<int>(c) == piv || work[c][row].is_zero()) continue;
        alone = false;
        Poly qt = work[c][row] / work[piv][row];
        for (int r = row; r < n; ++r)
          if (!work[piv][r].is_zero()) work[c][r] -= qt * work[piv][r];
      }
      if (!alone) continue;
      std::vector<Poly> col = std::move(work[piv]);
      work.erase(work.begin() + piv);
      Fq li = f.inv(col[row].lead());
      for (auto& x : col) x = x.scaled(li);
      basis.push_back(std::move(col));
      break;
    }
    work.erase(std::remove_if(work.begin(), work.end(),
                              [](const std::vector<Poly>& c) {
                                return std::all_of(c.begin(), c.end(), [](const Poly& x) { return x.is_zero(); });
                              }),
               work.end());
  }
  PolyMatrix out = zero_matrix(f, n, static_cast<int>(basis.size()));
  for (size_t c = 0; c < basis.size(); ++c)
    for (int r = 0; r < n; ++r) out(r, static_cast<int>(c)) = basis[c][r];
  return out;
}

PolyMatrix restrict_to(const PolyMatrix& op, const PolyMatrix& basis) {
  const Field& f = *basis(0, 0).field();
  const int n = basis.rows(), m = basis.cols();
  std::vector<int> pivot(m, -1);
  for (int c = 0; c < m; ++c)
    for (int r = 0; r < n; ++r)
      if (!basis(r, c).is_zero()) {
        pivot[c] = r;
        break;
      }
  PolyMatrix image = op * basis;
  PolyMatrix out = zero_matrix(f, m, m);
  for (int col = 0; col < m; ++col) {
    for (int c = 0; c < m; ++c) {
      Poly rhs = image(pivot[c], col);
      for (int c2 = 0; c2 < c; ++c2) rhs -= basis(pivot[c], c2) * out(c2, col);
      auto [qt, rem] = divrem(rhs, basis(pivot[c], c));
      if (!rem.is_zero()) throw std::invalid_argument("operator does not preserve the lattice");
      out(c, col) = qt;
    }
  }
  if (basis * out != image) throw std::invalid_argument("operator does not preserve the lattice");
  return out;
}

PolyMatrix chi_part_matrix(CocycleEngine& eng, int c, const PolyMatrix& op) {
  PolyMatrix p = chi_projector(eng, c);
  if (p * op != op * p) throw std::invalid_argument("operator does not commute with the projector");
  PolyMatrix b = image_basis(p);
  if (b.cols() == 0) return zero_matrix(eng.quotient().field(), 0, 0);
  return restrict_to(op, b);
}

PolyMatrix weight_reduction_matrix(const Field& f, int k, int n, int d) {
  if (n < 1) throw ConfigError("weight shift must be positive");
  PolyMatrix out = zero_matrix(f, d * (k - 1), d * (k + n - 1));
  for (int j = 0; j + n <= k + n - 2; ++j)
    for (int i = 0; i < d; ++i) out(j * d + i, (j + n) * d + i) = Poly::constant(f, 1);
  return out;
}

OrdinaryEigen ordinary_eigenvector(const PolyMatrix& u, int m) {
  if (m < 1) throw ConfigError("precision must be positive");
  const int n = u.rows();
  if (n == 0) throw std::invalid_argument("empty operator");
  if (slope_multiplicity(newton_polygon(charpoly_reciprocal(u)), Rational(0)) != 1)
    throw std::invalid_argument("slope-zero multiplicity is not one");
  const Field& f = *u(0, 0).field();
  SeriesMatrix us = to_series(u, m);
  SeriesMatrix w = us;
  // Positive slopes are at least 1/n, so U^(2^s) kills them mod t^m once 2^s >= m n.
  long long reach = 1;
  while (reach < static_cast<long long>(m) * n) {
    w = w * w;
    reach *= 2;
  }
  int col = -1, piv = -1;
  for (int c = 0; c < n && col < 0; ++c)
    for (int r = 0; r < n; ++r)
      if (w(r, c).is_unit()) {
        col = c;
        piv = r;
        break;
      }
  if (col < 0) throw BudgetError("power iteration found no unit column");
  OrdinaryEigen out;
  out.pivot = piv;
  TruncSeries inv = w(piv, col).inverse();
  for (int r = 0; r < n; ++r) out.v.push_back(w(r, col) * inv);
  std::vector<TruncSeries> uv(n, TruncSeries(f, m));
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) uv[r] = uv[r] + us(r, c) * out.v[c];
  out.lambda = uv[piv];
  for (int r = 0; r < n; ++r)
    if (!(uv[r] == out.lambda * out.v[r])) throw BudgetError("power iteration did not converge");
  return out;
}

}  // namespace drinfeld

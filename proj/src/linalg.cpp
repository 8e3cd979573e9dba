#include "drinfeld/linalg.hpp"

#include <algorithm>

namespace drinfeld {

namespace {

const Field& field_of(const PolyMatrix& m) {
  for (const auto& x : m.data())
    if (x.field()) return *x.field();
  throw std::invalid_argument("matrix without field");
}

std::vector<int> smith_impl(SeriesMatrix a, SeriesMatrix* h) {
  if (!a.square()) throw std::invalid_argument("Smith reduction of a non-square matrix");
  const int n = a.rows();
  std::vector<int> s;
  if (n == 0) return s;
  const int cap = a(0, 0).precision();
  const Field& f = *a(0, 0).field();
  if (h) {
    *h = SeriesMatrix(n, n, TruncSeries(f, cap));
    for (int i = 0; i < n; ++i) (*h)(i, i).coeff(0) = 1;
  }
  for (int k = 0; k < n; ++k) {
    int best = cap, pr = -1, pc = -1;
    for (int i = k; i < n; ++i)
      for (int j = k; j < n; ++j) {
        int v = a(i, j).valuation();
        if (v < best) {
          best = v;
          pr = i;
          pc = j;
        }
      }
    if (pr < 0) {
      s.resize(n, cap);
      break;
    }
    if (pr != k)
      for (int j = 0; j < n; ++j) std::swap(a(k, j), a(pr, j));
    if (pc != k) {
      for (int i = 0; i < n; ++i) std::swap(a(i, k), a(i, pc));
      if (h)
        for (int i = 0; i < n; ++i) std::swap((*h)(i, k), (*h)(i, pc));
    }
    const int v = best;
    TruncSeries uinv = a(k, k).shifted_down(v).inverse();
    for (int i = k + 1; i < n; ++i) {
      if (a(i, k).is_zero()) continue;
      TruncSeries c = a(i, k).shifted_down(v) * uinv;
      for (int j = k; j < n; ++j) a(i, j) = a(i, j) - c * a(k, j);
    }
    for (int j = k + 1; j < n; ++j) {
      if (a(k, j).is_zero()) continue;
      TruncSeries c = a(k, j).shifted_down(v) * uinv;
      if (h)
        for (int i = 0; i < n; ++i) (*h)(i, j) = (*h)(i, j) - c * (*h)(i, k);
      a(k, j) = TruncSeries(f, cap);
    }
    s.push_back(v);
  }
  return s;
}

}  // namespace

XPoly charpoly_reciprocal(const PolyMatrix& m) {
  const Field& f = field_of(m);
  return XPoly(berkowitz(m, Poly(f), Poly::constant(f, 1)));
}

XPoly charpoly(const PolyMatrix& m) { return charpoly_reciprocal(m).reversed(m.rows()); }

Poly determinant(const PolyMatrix& m) {
  const Field& f = field_of(m);
  auto p = berkowitz(m, Poly(f), Poly::constant(f, 1));
  Poly d = p.back();
  return m.rows() % 2 ? -d : d;
}

int NewtonPolygon::total_length() const {
  int s = 0;
  for (const auto& seg : segments) s += seg.length;
  return s;
}

NewtonPolygon hull_of_points(const std::vector<std::pair<int, int>>& pts) {
  std::vector<std::pair<long long, long long>> st;
  for (const auto& [x, y] : pts) {
    while (st.size() >= 2) {
      auto [ox, oy] = st[st.size() - 2];
      auto [ax, ay] = st.back();
      long long cross = (ax - ox) * (y - oy) - (ay - oy) * (x - ox);
      if (cross > 0) break;
      st.pop_back();
    }
    st.emplace_back(x, y);
  }
  NewtonPolygon np;
  for (size_t i = 1; i < st.size(); ++i) {
    long long dx = st[i].first - st[i - 1].first;
    long long dy = st[i].second - st[i - 1].second;
    np.segments.push_back({Rational(dy, dx), static_cast<int>(dx)});
  }
  return np;
}

NewtonPolygon newton_polygon(const XPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("Newton polygon of the zero polynomial");
  std::vector<std::pair<int, int>> pts;
  for (int l = 0; l <= p.degree(); ++l)
    if (!p.coeff(l).is_zero()) pts.emplace_back(l, p.coeff(l).valuation());
  return hull_of_points(pts);
}

int slope_multiplicity(const NewtonPolygon& np, const Rational& a) {
  for (const auto& seg : np.segments)
    if (seg.slope == a) return seg.length;
  return 0;
}

ElementaryDivisors elementary_divisors(const PolyMatrix& m, int cap) {
  if (!m.square()) throw std::invalid_argument("Smith reduction of a non-square matrix");
  if (cap < 0) {
    Poly d = determinant(m);
    if (d.is_zero()) throw std::invalid_argument("singular matrix needs an explicit precision cap");
    cap = 1 + d.valuation();
  }
  if (m.rows() == 0) return {{}, cap};
  return {smith_impl(to_series(m, cap), nullptr), cap};
}

ElementaryDivisors elementary_divisors(const SeriesMatrix& m) {
  int cap = m.rows() ? m(0, 0).precision() : 0;
  return {smith_impl(m, nullptr), cap};
}

SmithTransform smith_with_transform(const SeriesMatrix& m) {
  SmithTransform out;
  out.s = smith_impl(m, &out.h);
  return out;
}

XPoly resultant_x(const XPoly& p, const XPoly& q) {
  if (p.is_zero() || q.is_zero()) throw std::invalid_argument("resultant of a zero polynomial");
  const Field* fp = nullptr;
  for (const auto& c : p.coeffs())
    if (c.field()) fp = c.field();
  const Field& f = *fp;
  const int m = p.degree(), n = q.degree();
  // Coefficients of Q(X + Z) in X, each a polynomial in Z over F_q[t].
  std::vector<std::vector<int>> binom(n + 1, std::vector<int>(n + 1, 0));
  for (int j = 0; j <= n; ++j) {
    binom[j][0] = 1;
    for (int i = 1; i <= j; ++i) binom[j][i] = (binom[j - 1][i - 1] + (i <= j - 1 ? binom[j - 1][i] : 0)) % f.p();
  }
  std::vector<XPoly> qs(n + 1);
  for (int i = 0; i <= n; ++i) {
    std::vector<Poly> zc(n - i + 1);
    for (int j = i; j <= n; ++j) zc[j - i] = q.coeff(j).scaled(f.from_int(binom[j][i]));
    qs[i] = XPoly(std::move(zc));
  }
  const int size = m + n;
  if (size == 0) return XPoly({Poly::constant(f, 1)});
  Matrix<XPoly> syl(size, size, XPoly());
  for (int r = 0; r < n; ++r)
    for (int i = 0; i <= m; ++i) syl(r, r + i) = XPoly({p.coeff(m - i)});
  for (int r = 0; r < m; ++r)
    for (int i = 0; i <= n; ++i) syl(n + r, r + i) = qs[n - i];
  auto cp = berkowitz(syl, XPoly(), XPoly({Poly::constant(f, 1)}));
  return size % 2 ? -cp.back() : cp.back();
}

NewtonPolygon diff_valuations(const XPoly& p1, const XPoly& p2) {
  XPoly r = resultant_x(p1, p2);
  int s = 0;
  while (s <= r.degree() && r.coeff(s).is_zero()) ++s;
  std::vector<Poly> rest(r.coeffs().begin() + s, r.coeffs().end());
  XPoly stripped(std::move(rest));
  NewtonPolygon np = newton_polygon(stripped.reversed());
  np.infinite = s;
  return np;
}

}  // namespace drinfeld

namespace drinfeld {

PolyMatrix kernel_basis(const PolyMatrix& m) {
  const int r = m.rows(), n = m.cols();
  if (n == 0) return m;
  const Field& f = *m(0, 0).field();
  // Column reduction of (M over I); columns whose top part vanishes span
  // the kernel.
  std::vector<std::vector<Poly>> cols(n, std::vector<Poly>(r + n, Poly(f)));
  for (int c = 0; c < n; ++c) {
    for (int i = 0; i < r; ++i) cols[c][i] = m(i, c);
    cols[c][r + c] = Poly::constant(f, 1);
  }
  int first = 0;  // columns [0, first) are pivots already fixed
  for (int row = 0; row < r && first < n; ++row) {
    while (true) {
      int piv = -1;
      for (int c = first; c < n; ++c)
        if (!cols[c][row].is_zero() && (piv < 0 || cols[c][row].degree() < cols[piv][row].degree())) piv = c;
      if (piv < 0) break;
      bool alone = true;
      for (int c = first; c < n; ++c) {
        if (c == piv || cols[c][row].is_zero()) continue;
        alone = false;
        Poly q = cols[c][row] / cols[piv][row];
        for (int i = row; i < r + n; ++i)
          if (!cols[piv][i].is_zero()) cols[c][i] -= q * cols[piv][i];
      }
      if (alone) {
        std::swap(cols[piv], cols[first]);
        ++first;
        break;
      }
    }
  }
  PolyMatrix out = zero_matrix(f, n, n - first);
  for (int c = first; c < n; ++c) {
    Poly g(f);
    for (int i = 0; i < n; ++i) g = gcd(g, cols[c][r + i]);
    for (int i = 0; i < n; ++i) out(i, c - first) = exact_div(cols[c][r + i], g);
  }
  return out;
}

}  // namespace drinfeld

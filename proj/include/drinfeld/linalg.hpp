#pragma once

#include <vector>

#include "drinfeld/matrix.hpp"
#include "drinfeld/rational.hpp"
#include "drinfeld/xpoly.hpp"

namespace drinfeld {

// Division-free characteristic polynomial (Berkowitz). Returns the
// coefficients of det(lambda I - A) in descending powers of lambda.
template <class T>
std::vector<T> berkowitz(const Matrix<T>& a, const T& zero, const T& one) {
  if (!a.square()) throw std::invalid_argument("characteristic polynomial of a non-square matrix");
  const int n = a.rows();
  if (n == 0) return {one};
  std::vector<T> p = {one, zero - a(n - 1, n - 1)};
  for (int i = n - 2; i >= 0; --i) {
    const int m = n - 1 - i;
    std::vector<T> tv(m + 2, zero);
    tv[0] = one;
    tv[1] = zero - a(i, i);
    std::vector<T> x(m, zero);
    for (int k = 0; k < m; ++k) x[k] = a(i + 1 + k, i);
    for (int s = 0; s < m; ++s) {
      T acc = zero;
      for (int k = 0; k < m; ++k) acc = acc + a(i, i + 1 + k) * x[k];
      tv[s + 2] = zero - acc;
      if (s + 1 < m) {
        std::vector<T> y(m, zero);
        for (int r = 0; r < m; ++r)
          for (int k = 0; k < m; ++k) y[r] = y[r] + a(i + 1 + r, i + 1 + k) * x[k];
        x = std::move(y);
      }
    }
    std::vector<T> np(m + 2, zero);
    for (int j = 0; j < m + 2; ++j)
      for (int l = 0; l <= std::min(j, m); ++l) np[j] = np[j] + tv[j - l] * p[l];
    p = std::move(np);
  }
  return p;
}

// det(I - M X).
XPoly charpoly_reciprocal(const PolyMatrix& m);
// det(X I - M), monic.
XPoly charpoly(const PolyMatrix& m);
Poly determinant(const PolyMatrix& m);

struct Segment {
  Rational slope;
  int length;
  bool operator==(const Segment& o) const { return slope == o.slope && length == o.length; }
};

struct NewtonPolygon {
  std::vector<Segment> segments;  // strictly increasing slopes
  int infinite = 0;               // multiplicity of slope "infinity" where tracked
  int total_length() const;
};

// Lower convex hull of the given (x, y) points, x strictly increasing.
NewtonPolygon hull_of_points(const std::vector<std::pair<int, int>>& pts);
NewtonPolygon newton_polygon(const XPoly& p);
int slope_multiplicity(const NewtonPolygon& np, const Rational& a);

struct ElementaryDivisors {
  std::vector<int> s;  // ascending; entries equal to cap are saturated
  int cap = 0;
  bool saturated(size_t i) const { return s[i] >= cap; }
};

// Smith reduction over F_q[[t]]/t^cap. cap < 0 selects 1 + v_t(det).
ElementaryDivisors elementary_divisors(const PolyMatrix& m, int cap = -1);
ElementaryDivisors elementary_divisors(const SeriesMatrix& m);

// Smith reduction also returning a column transform H with M H = G^{-1} D
// (D diagonal with ascending valuations, G invertible).
struct SmithTransform {
  std::vector<int> s;
  SeriesMatrix h;
};
SmithTransform smith_with_transform(const SeriesMatrix& m);

// Basis of the kernel over F_q[t] (columns, each primitive).
PolyMatrix kernel_basis(const PolyMatrix& m);

// Res_X(P(X), Q(X + Z)) as a polynomial in Z.
XPoly resultant_x(const XPoly& p, const XPoly& q);

// Valuations v_t(beta - alpha) over root pairs alpha of p1 and beta of p2;
// exact coincidences are counted in `infinite`.
NewtonPolygon diff_valuations(const XPoly& p1, const XPoly& p2);

}  // namespace drinfeld

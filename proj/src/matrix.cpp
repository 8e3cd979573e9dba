#include "drinfeld/matrix.hpp"

#include <algorithm>

namespace drinfeld {

PolyMatrix zero_matrix(const Field& f, int rows, int cols) { return PolyMatrix(rows, cols, Poly(f)); }

PolyMatrix identity_matrix(const Field& f, int n) {
  PolyMatrix m = zero_matrix(f, n, n);
  for (int i = 0; i < n; ++i) m(i, i) = Poly::constant(f, 1);
  return m;
}

namespace {
const Field* field_of(const PolyMatrix& m) {
  for (const auto& x : m.data())
    if (x.field()) return x.field();
  return nullptr;
}
}  // namespace

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix shape mismatch");
  const Field* f = field_of(a);
  if (!f) f = field_of(b);
  PolyMatrix out(a.rows(), b.cols(), f ? Poly(*f) : Poly());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      const Poly& x = a(i, k);
      if (x.is_zero()) continue;
      for (int j = 0; j < b.cols(); ++j)
        if (!b(k, j).is_zero()) out(i, j) += x * b(k, j);
    }
  return out;
}

PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("matrix shape mismatch");
  PolyMatrix out(a);
  for (size_t i = 0; i < out.data().size(); ++i) out.data()[i] += b.data()[i];
  return out;
}

PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("matrix shape mismatch");
  PolyMatrix out(a);
  for (size_t i = 0; i < out.data().size(); ++i) out.data()[i] -= b.data()[i];
  return out;
}

PolyMatrix scaled(const PolyMatrix& a, const Poly& c) {
  PolyMatrix out(a);
  for (auto& x : out.data()) x = x * c;
  return out;
}

std::vector<Poly> operator*(const PolyMatrix& a, const std::vector<Poly>& v) {
  std::vector<Poly> out(a.rows());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out[i] += a(i, j) * v[j];
  return out;
}

int min_valuation(const PolyMatrix& m) {
  int v = kInf;
  for (const auto& x : m.data()) v = std::min(v, x.valuation());
  return v;
}

PolyMatrix truncated(const PolyMatrix& m, int n) {
  PolyMatrix out(m);
  for (auto& x : out.data()) x = x.truncated(n);
  return out;
}

bool congruent_mod_t(const PolyMatrix& a, const PolyMatrix& b, int n) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (size_t i = 0; i < a.data().size(); ++i)
    if ((a.data()[i] - b.data()[i]).valuation() < n) return false;
  return true;
}

SeriesMatrix to_series(const PolyMatrix& m, int prec) {
  const Field* f = field_of(m);
  if (!f) throw std::invalid_argument("matrix without field");
  SeriesMatrix out(m.rows(), m.cols(), TruncSeries(*f, prec));
  for (size_t i = 0; i < m.data().size(); ++i) out.data()[i] = TruncSeries(m.data()[i], *f, prec);
  return out;
}

SeriesMatrix operator*(const SeriesMatrix& a, const SeriesMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix shape mismatch");
  const TruncSeries& z = a.data().front();
  SeriesMatrix out(a.rows(), b.cols(), TruncSeries(*z.field(), z.precision()));
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      if (a(i, k).is_zero()) continue;
      for (int j = 0; j < b.cols(); ++j) out(i, j) = out(i, j) + a(i, k) * b(k, j);
    }
  return out;
}

}  // namespace drinfeld

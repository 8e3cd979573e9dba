#pragma once

#include <stdexcept>
#include <vector>

#include "drinfeld/poly.hpp"
#include "drinfeld/series.hpp"

namespace drinfeld {

// Dense row-major matrix over a commutative ring type T.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols, const T& fill) : r_(rows), c_(cols), a_(static_cast<size_t>(rows) * cols, fill) {}

  int rows() const { return r_; }
  int cols() const { return c_; }
  bool square() const { return r_ == c_; }
  T& operator()(int i, int j) { return a_[static_cast<size_t>(i) * c_ + j]; }
  const T& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * c_ + j]; }
  std::vector<T>& data() { return a_; }
  const std::vector<T>& data() const { return a_; }

  Matrix block(int r0, int c0, int nr, int nc) const {
    Matrix out(nr, nc, a_.empty() ? T() : a_[0]);
    for (int i = 0; i < nr; ++i)
      for (int j = 0; j < nc; ++j) out(i, j) = (*this)(r0 + i, c0 + j);
    return out;
  }

  Matrix transposed() const {
    Matrix out(c_, r_, a_.empty() ? T() : a_[0]);
    for (int i = 0; i < r_; ++i)
      for (int j = 0; j < c_; ++j) out(j, i) = (*this)(i, j);
    return out;
  }

  bool operator==(const Matrix& o) const { return r_ == o.r_ && c_ == o.c_ && a_ == o.a_; }
  bool operator!=(const Matrix& o) const { return !(*this == o); }

 private:
  int r_ = 0, c_ = 0;
  std::vector<T> a_;
};

using PolyMatrix = Matrix<Poly>;
using SeriesMatrix = Matrix<TruncSeries>;

PolyMatrix zero_matrix(const Field& f, int rows, int cols);
PolyMatrix identity_matrix(const Field& f, int n);
PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b);
PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b);
PolyMatrix scaled(const PolyMatrix& a, const Poly& c);
std::vector<Poly> operator*(const PolyMatrix& a, const std::vector<Poly>& v);

// Smallest t-adic valuation among entries (kInf for the zero matrix).
int min_valuation(const PolyMatrix& m);
PolyMatrix truncated(const PolyMatrix& m, int n);
bool congruent_mod_t(const PolyMatrix& a, const PolyMatrix& b, int n);

SeriesMatrix to_series(const PolyMatrix& m, int prec);
SeriesMatrix operator*(const SeriesMatrix& a, const SeriesMatrix& b);

}  // namespace drinfeld

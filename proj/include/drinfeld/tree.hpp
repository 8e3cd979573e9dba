#pragma once

#include <climits>
#include <string>
#include <vector>

#include "drinfeld/poly.hpp"

namespace drinfeld {

// Finite Laurent polynomial sum c[i] t^(low + i).
class Laurent {
 public:
  Laurent() = default;
  explicit Laurent(const Poly& p);
  Laurent(const Field& f, int low, std::vector<Fq> c);

  bool is_zero() const { return c_.empty(); }
  // Highest exponent; INT_MIN for zero.
  int degree() const { return c_.empty() ? INT_MIN : low_ + static_cast<int>(c_.size()) - 1; }
  int low() const { return low_; }
  Fq coeff(int e) const;
  Fq lead() const { return c_.empty() ? 0 : c_.back(); }
  const Field* field() const { return f_; }

  Laurent operator+(const Laurent& o) const;
  Laurent operator-(const Laurent& o) const;
  Laurent operator*(const Laurent& o) const;
  Laurent scaled(Fq c) const;
  Laurent shifted(int k) const;  // times t^k
  Laurent above(int n) const;    // keep exponents > n
  Laurent below(int n) const;    // keep exponents < n
  Poly polynomial_part() const;  // exponents >= 0

  bool operator==(const Laurent& o) const { return (c_.empty() && o.c_.empty()) || (low_ == o.low_ && c_ == o.c_); }
  bool operator<(const Laurent& o) const;
  std::string str() const;

 private:
  void normalize();
  const Field* f_ = nullptr;
  int low_ = 0;
  std::vector<Fq> c_;
};

// Terms of a/b with exponent > n, expanded in powers of 1/t.
Laurent expand_quotient(const Laurent& a, const Laurent& b, int n);

// 2x2 matrix over F_q[t] acting on the tree by left multiplication on
// column lattices. Only the class modulo scalars matters for the action.
struct Mat2 {
  Poly a, b, c, d;

  static Mat2 identity(const Field& f);
  const Field& field() const;
  static Mat2 from_ints(const Field& f, long long a, long long b, long long c, long long d);
  Poly det() const { return a * d - b * c; }
  Mat2 adjugate() const { return {d, -b, -c, a}; }  // inverse when det == 1
  Mat2 operator*(const Mat2& o) const;
  Mat2 reduced_mod(const Poly& m) const;
  bool operator==(const Mat2& o) const { return a == o.a && b == o.b && c == o.c && d == o.d; }
  bool operator<(const Mat2& o) const;
  std::string str() const;
};

// Vertex [ (t^n u ; 0 1) ] with u a Laurent polynomial whose exponents all
// exceed n. The standard vertex v_i is (i, 0).
struct TreeVertex {
  int n = 0;
  Laurent u;
  bool operator==(const TreeVertex& o) const { return n == o.n && u == o.u; }
  bool operator!=(const TreeVertex& o) const { return !(*this == o); }
  bool operator<(const TreeVertex& o) const { return n != o.n ? n < o.n : u < o.u; }
  std::string str() const;
};

struct OrientedEdge {
  TreeVertex o, t;
  OrientedEdge reversed() const { return {t, o}; }
  bool operator==(const OrientedEdge& e) const { return o == e.o && t == e.t; }
  bool operator<(const OrientedEdge& e) const { return o == e.o ? t < e.t : o < e.o; }
  std::string str() const { return o.str() + " -> " + t.str(); }
};

TreeVertex standard_vertex(const Field& f, int i);
OrientedEdge standard_edge(const Field& f, int i);  // v_i -> v_{i+1}

// Normal form of the class of the lattice spanned by the columns of
// (alpha beta; gamma delta).
TreeVertex normalize_vertex(const Laurent& alpha, const Laurent& beta, const Laurent& gamma, const Laurent& delta);

TreeVertex act(const Mat2& g, const TreeVertex& v);
OrientedEdge act(const Mat2& g, const OrientedEdge& e);

// Upward neighbour (n+1, .) first, then (n-1, u + c t^n) for c = 0..q-1.
std::vector<TreeVertex> neighbors(const Field& f, const TreeVertex& v);
bool adjacent(const TreeVertex& v, const TreeVertex& w);

struct VertexReduction {
  int i;
  Mat2 g;  // g in SL_2(A), g . v = v_i
};
VertexReduction reduce_vertex(const Field& f, const TreeVertex& v);

struct EdgeReduction {
  int i;
  int sign;  // +1: g . e = e_i, -1: g . e = -e_i
  Mat2 g;
};
EdgeReduction reduce_edge(const Field& f, const OrientedEdge& e);

std::vector<Mat2> sl2_fq(const Field& f);
// Stab(v_i) and Stab(e_i) inside SL_2(A).
std::vector<Mat2> std_vertex_stabilizer(const Field& f, int i);
std::vector<Mat2> std_edge_stabilizer(const Field& f, int i);

}  // namespace drinfeld

#include "drinfeld/tree.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

#include "drinfeld/errors.hpp"

namespace drinfeld {

Laurent::Laurent(const Poly& p) : f_(p.field()), low_(0), c_(p.coeffs()) { normalize(); }

Laurent::Laurent(const Field& f, int low, std::vector<Fq> c) : f_(&f), low_(low), c_(std::move(c)) { normalize(); }

void Laurent::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
  size_t k = 0;
  while (k < c_.size() && c_[k] == 0) ++k;
  if (k) {
    c_.erase(c_.begin(), c_.begin() + k);
    low_ += static_cast<int>(k);
  }
  if (c_.empty()) low_ = 0;
}

Fq Laurent::coeff(int e) const {
  int i = e - low_;
  return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : 0;
}

Laurent Laurent::operator+(const Laurent& o) const {
  if (o.is_zero()) return *this;
  if (is_zero()) return o;
  int lo = std::min(low_, o.low_), hi = std::max(degree(), o.degree());
  std::vector<Fq> v(hi - lo + 1, 0);
  for (size_t i = 0; i < c_.size(); ++i) v[low_ - lo + i] = c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) v[o.low_ - lo + i] = f_->add(v[o.low_ - lo + i], o.c_[i]);
  return Laurent(*f_, lo, std::move(v));
}

Laurent Laurent::operator-(const Laurent& o) const {
  if (o.is_zero()) return *this;
  return *this + o.scaled(o.f_->neg(1));
}

Laurent Laurent::operator*(const Laurent& o) const {
  if (is_zero() || o.is_zero()) return Laurent();
  Poly prod = Poly(*f_, c_) * Poly(*f_, o.c_);
  return Laurent(*f_, low_ + o.low_, prod.coeffs());
}

Laurent Laurent::scaled(Fq c) const {
  if (is_zero()) return *this;
  std::vector<Fq> v(c_);
  for (auto& x : v) x = f_->mul(x, c);
  return Laurent(*f_, low_, std::move(v));
}

Laurent Laurent::shifted(int k) const {
  Laurent r(*this);
  if (!r.is_zero()) r.low_ += k;
  return r;
}

Laurent Laurent::above(int n) const {
  if (is_zero() || low_ > n) return *this;
  if (degree() <= n) return Laurent();
  return Laurent(*f_, n + 1, std::vector<Fq>(c_.begin() + (n + 1 - low_), c_.end()));
}

Laurent Laurent::below(int n) const {
  if (is_zero() || degree() < n) return *this;
  if (low_ >= n) return Laurent();
  return Laurent(*f_, low_, std::vector<Fq>(c_.begin(), c_.begin() + (n - low_)));
}

Poly Laurent::polynomial_part() const {
  Laurent p = above(-1);
  if (p.is_zero()) return f_ ? Poly(*f_) : Poly();
  std::vector<Fq> v(p.low_, 0);
  v.insert(v.end(), p.c_.begin(), p.c_.end());
  return Poly(*f_, std::move(v));
}

bool Laurent::operator<(const Laurent& o) const {
  if (is_zero() || o.is_zero()) return is_zero() && !o.is_zero();
  if (low_ != o.low_) return low_ < o.low_;
  return c_ < o.c_;
}

std::string Laurent::str() const {
  if (is_zero()) return "0";
  std::string s;
  for (int e = degree(); e >= low_; --e) {
    Fq c = coeff(e);
    if (!c) continue;
    if (!s.empty()) s += " + ";
    s += f_->to_string(c);
    if (e) s += "*t^" + std::to_string(e);
  }
  return s;
}

Laurent expand_quotient(const Laurent& a, const Laurent& b, int n) {
  if (b.is_zero()) throw std::domain_error("division by zero Laurent polynomial");
  const Field& f = *b.field();
  Laurent rem = a, q;
  Fq li = f.inv(b.lead());
  while (!rem.is_zero()) {
    int e = rem.degree() - b.degree();
    if (e <= n) break;
    Laurent term(f, e, {f.mul(rem.lead(), li)});
    q = q + term;
    rem = rem - term * b;
  }
  return q;
}

const Field& Mat2::field() const {
  for (const Poly* x : {&a, &b, &c, &d})
    if (x->field()) return *x->field();
  throw std::invalid_argument("matrix without field");
}

Mat2 Mat2::identity(const Field& f) { return from_ints(f, 1, 0, 0, 1); }

Mat2 Mat2::from_ints(const Field& f, long long a, long long b, long long c, long long d) {
  return {Poly::from_int(f, a), Poly::from_int(f, b), Poly::from_int(f, c), Poly::from_int(f, d)};
}

Mat2 Mat2::operator*(const Mat2& o) const {
  return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
}

Mat2 Mat2::reduced_mod(const Poly& m) const { return {a % m, b % m, c % m, d % m}; }

bool Mat2::operator<(const Mat2& o) const {
  if (a != o.a) return a < o.a;
  if (b != o.b) return b < o.b;
  if (c != o.c) return c < o.c;
  return d < o.d;
}

std::string Mat2::str() const {
  return "[[" + a.str() + ", " + b.str() + "], [" + c.str() + ", " + d.str() + "]]";
}

std::string TreeVertex::str() const { return "(" + std::to_string(n) + "; " + u.str() + ")"; }

TreeVertex standard_vertex(const Field&, int i) { return {i, Laurent()}; }

OrientedEdge standard_edge(const Field& f, int i) { return {standard_vertex(f, i), standard_vertex(f, i + 1)}; }

TreeVertex normalize_vertex(const Laurent& alpha, const Laurent& beta, const Laurent& gamma, const Laurent& delta) {
  const Laurent *al = &alpha, *be = &beta, *ga = &gamma, *de = &delta;
  if (ga->degree() > de->degree()) {
    std::swap(al, be);
    std::swap(ga, de);
  }
  if (de->is_zero()) throw std::domain_error("singular lattice basis");
  Laurent det = (*al) * (*de) - (*be) * (*ga);
  if (det.is_zero()) throw std::domain_error("singular lattice basis");
  int n = det.degree() - 2 * de->degree();
  return {n, expand_quotient(*be, *de, n)};
}

TreeVertex act(const Mat2& g, const TreeVertex& v) {
  Laurent tn = Laurent(g.field(), v.n, {1});
  Laurent a(g.a), b(g.b), c(g.c), d(g.d);
  return normalize_vertex(a * tn, a * v.u + b, c * tn, c * v.u + d);
}

OrientedEdge act(const Mat2& g, const OrientedEdge& e) { return {act(g, e.o), act(g, e.t)}; }

std::vector<TreeVertex> neighbors(const Field& f, const TreeVertex& v) {
  std::vector<TreeVertex> out;
  out.push_back({v.n + 1, v.u.above(v.n + 1)});
  for (int c = 0; c < f.q(); ++c) out.push_back({v.n - 1, v.u + Laurent(f, v.n, {static_cast<Fq>(c)})});
  return out;
}

bool adjacent(const TreeVertex& v, const TreeVertex& w) {
  if (w.n == v.n + 1) return w.u == v.u.above(v.n + 1);
  if (w.n == v.n - 1) return w.u.above(v.n) == v.u && w.u.below(v.n).is_zero();
  return false;
}

VertexReduction reduce_vertex(const Field& f, const TreeVertex& v) {
  const Mat2 w = Mat2::from_ints(f, 0, 1, -1, 0);
  Mat2 g = Mat2::identity(f);
  TreeVertex cur = v;
  const int guard = 4 * (std::abs(v.n) + std::max(0, v.u.degree()) + std::max(0, -v.u.low())) + 16;
  for (int step = 0; step < guard; ++step) {
    Poly p = cur.u.polynomial_part();
    if (!p.is_zero()) {
      g = Mat2{Poly::constant(f, 1), -p, Poly(f), Poly::constant(f, 1)} * g;
      cur.u = cur.u.below(0);
    }
    if (cur.u.is_zero()) {
      if (cur.n >= 0) return {cur.n, g};
      return {-cur.n, w * g};
    }
    cur = act(w, cur);
    g = w * g;
  }
  throw InternalError("vertex reduction did not terminate");
}

EdgeReduction reduce_edge(const Field& f, const OrientedEdge& e) {
  if (!adjacent(e.o, e.t)) throw std::invalid_argument("not an edge: " + e.str());
  VertexReduction r = reduce_vertex(f, e.o);
  TreeVertex tt = act(r.g, e.t);
  const int i = r.i;
  if (tt == standard_vertex(f, i + 1)) return {i, 1, r.g};
  if (i >= 1) {
    Fq c = tt.u.coeff(i);
    Mat2 h{Poly::constant(f, 1), Poly::monomial(f, f.neg(c), i), Poly(f), Poly::constant(f, 1)};
    return {i - 1, -1, h * r.g};
  }
  for (const Mat2& s : sl2_fq(f))
    if (act(s, tt) == standard_vertex(f, 1)) return {0, 1, s * r.g};
  throw InternalError("edge reduction failed at the origin");
}

std::vector<Mat2> sl2_fq(const Field& f) {
  std::vector<Mat2> out;
  const int q = f.q();
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b)
      for (int c = 0; c < q; ++c)
        for (int d = 0; d < q; ++d) {
          Fq det = f.sub(f.mul(static_cast<Fq>(a), static_cast<Fq>(d)), f.mul(static_cast<Fq>(b), static_cast<Fq>(c)));
          if (det != 1) continue;
          out.push_back({Poly::constant(f, static_cast<Fq>(a)), Poly::constant(f, static_cast<Fq>(b)),
                         Poly::constant(f, static_cast<Fq>(c)), Poly::constant(f, static_cast<Fq>(d))});
        }
  return out;
}

std::vector<Mat2> std_edge_stabilizer(const Field& f, int i) {
  std::vector<Mat2> out;
  for (int a = 1; a < f.q(); ++a)
    for (const Poly& b : polys_below_degree(f, i + 1))
      out.push_back({Poly::constant(f, static_cast<Fq>(a)), b, Poly(f), Poly::constant(f, f.inv(static_cast<Fq>(a)))});
  return out;
}

std::vector<Mat2> std_vertex_stabilizer(const Field& f, int i) {
  return i == 0 ? sl2_fq(f) : std_edge_stabilizer(f, i);
}

}  // namespace drinfeld

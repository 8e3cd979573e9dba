#pragma once

#include <map>
#include <optional>
#include <vector>

#include "drinfeld/level.hpp"
#include "drinfeld/matrix.hpp"

namespace drinfeld {

// Matrix of omega -> g o omega on V_k = Hom(H_{k-2}, A) in the dual basis
// (X^j Y^{k-2-j})^v, given g^{-1} = (a b; c d). Row s, column r holds the
// coefficient of X^r Y^{k-2-r} in (aX + cY)^s (bX + dY)^{k-2-s}. Passing
// g^{-1} keeps the entries polynomial for g in SL_2(A) or g^{-1} in M_2(A).
PolyMatrix vk_matrix(int k, const Mat2& g_inv);

// c(e) = sum over j of blocks[j] * c(f_j), f_j the basis edges.
struct Expansion {
  std::map<int, PolyMatrix> blocks;
};

// Extension of cocycles from the basis edges to the whole tree.
class CocycleEngine {
 public:
  CocycleEngine(const QuotientData& qd, int k, size_t cache_cap = size_t{1} << 20);

  const QuotientData& quotient() const { return *qd_; }
  int k() const { return k_; }
  int dim() const { return qd_->d() * (k_ - 1); }

  Expansion expand(const OrientedEdge& e);
  // Value of the cocycle with c(f_j) = values[j] at e.
  std::vector<Poly> evaluate(const std::vector<std::vector<Poly>>& values, const OrientedEdge& e);

  // Block matrix with block (l, j) = sum_x vk_matrix(x) * expand(x . f_l)[j]
  // laid out in the ordered basis (index = coordinate * d + coset).
  PolyMatrix operator_matrix(const std::vector<Mat2>& xs);

 private:
  Expansion stable_term(const Mat2& h);
  void add_into(Expansion& acc, const Expansion& x, int sign) const;

  const QuotientData* qd_;
  int k_;
  size_t cap_;
  std::map<OrientedEdge, Expansion> memo_;
};

PolyMatrix hecke_matrix(const QuotientData& qd, int k, const Poly& q);
PolyMatrix hecke_matrix(CocycleEngine& eng, const Poly& q);
PolyMatrix diamond_matrix(CocycleEngine& eng, Fq lambda);
// -sum over lambda of lambda^{-c} <lambda>.
PolyMatrix chi_projector(CocycleEngine& eng, int c);

// Basis of the image lattice of a projector, in column Hermite form.
PolyMatrix image_basis(const PolyMatrix& proj);
// Matrix of op on the lattice spanned by the columns of basis (op must
// preserve it).
PolyMatrix restrict_to(const PolyMatrix& op, const PolyMatrix& basis);
PolyMatrix chi_part_matrix(CocycleEngine& eng, int c, const PolyMatrix& op);

// 1 (x) rho_{k,N}: coordinates (i, j + N) of weight k + N go to (i, j) of
// weight k; coordinates j < N are killed.
PolyMatrix weight_reduction_matrix(const Field& f, int k, int n, int d);

struct OrdinaryEigen {
  std::vector<TruncSeries> v;  // normalized so that v[pivot] = 1
  int pivot = -1;
  TruncSeries lambda;
};
// Slope-zero eigenvector of U modulo t^m. Throws when d(U, 0) != 1.
OrdinaryEigen ordinary_eigenvector(const PolyMatrix& u, int m);

}  // namespace drinfeld

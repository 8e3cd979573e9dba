#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "drinfeld/tree.hpp"

namespace drinfeld {

// Gamma = { g in SL_2(A) : g = (1 *; 0 1) mod n, g mod t^r in (Theta *; 0 Theta) }
// with Theta a subgroup of 1 + t A/t^r.
struct LevelSpec {
  enum class Theta { Trivial, Full, Generated };

  Poly n;  // coprime to t
  int r = 1;
  Theta theta = Theta::Trivial;
  std::vector<Poly> theta_gens;  // used when theta == Generated

  Poly modulus() const { return n * Poly::monomial(*n.field(), 1, r); }
  std::string str() const;
};

LevelSpec gamma1_level(const Field& f, const Poly& n, int r);
LevelSpec gamma0p_level(const Field& f, const Poly& n, int r);
LevelSpec theta_level(const Field& f, const Poly& n, int r, std::vector<Poly> gens);

// Grammar: gamma1:<poly>[,<poly>^r] | gamma0p:<poly>^r | theta:<g1>/<g2>/...
// The prime must be t or t - c; in the latter case *shift receives c and
// every polynomial is rewritten under t -> t + c.
LevelSpec parse_level(const Field& f, const std::string& text, int theta_r, Fq* shift);

// Lift of a matrix over A/m with determinant 1 to SL_2(A).
Mat2 lift_sl2(const Mat2& residues, const Poly& m);

struct StableCell {
  int i;       // level on the standard half-line
  Mat2 h;      // the cell is h . e_i (or h . v_i)
  int orbit;   // index into the label orbit table
};

struct EdgeClass {
  int rep;     // index into QuotientData::lambda1
  int sign;    // sign * gamma . e = lambda1[rep] edge
  Mat2 gamma;  // element of Gamma
};

// Everything about Gamma\T needed downstream. Steinberg basis edges are
// f_j = y_j . e_pi where Gamma_1(t) = disjoint union of Gamma y_j and
// e_pi = w . e_0 is the unique stable edge class of Gamma_1(t).
class QuotientData {
 public:
  QuotientData(const Field& f, LevelSpec level);

  const Field& field() const { return *f_; }
  const LevelSpec& level() const { return level_; }
  const Poly& modulus() const { return m_; }
  int d() const { return static_cast<int>(coset_reps_.size()); }
  const std::vector<Mat2>& coset_reps() const { return coset_reps_; }
  const std::vector<OrientedEdge>& basis_edges() const { return basis_edges_; }
  const Mat2& w() const { return w_; }

  bool member(const Mat2& g) const;
  bool member_gamma1t(const Mat2& g) const;
  // For g in Gamma_1(t): the j with g in Gamma y_j.
  int coset_of(const Mat2& g) const;

  // Gamma-stable cells (computed on first use).
  const std::vector<StableCell>& lambda1() const;
  const std::vector<StableCell>& stable_vertices() const;
  bool is_stable(const OrientedEdge& e) const;
  bool is_stable(const TreeVertex& v) const;
  EdgeClass edge_class(const OrientedEdge& e) const;
  // For an unstable vertex, the neighbour in the direction of its cusp.
  TreeVertex cusp_direction(const TreeVertex& v) const;

  std::vector<Mat2> hecke_cosets(const Poly& q) const;
  Mat2 eta(Fq lambda) const;

  std::uint64_t key(const Mat2& residues) const;

 private:
  void build_gamma1t_cosets();
  void build_orbits() const;
  int residue(const Poly& p) const;
  bool member_residue(std::uint64_t key) const;

  const Field* f_;
  LevelSpec level_;
  Poly m_;
  int deg_m_;
  long long rsz_;
  std::vector<Poly> residues_;
  std::vector<int> mul_, add_, sub_;
  std::vector<int> mod_n_, mod_tr_, mod_t_;
  std::vector<char> theta_;  // indexed by residue mod t^r
  Poly tr_;
  Mat2 w_;

  std::vector<Mat2> coset_reps_;
  std::vector<OrientedEdge> basis_edges_;
  std::unordered_map<std::uint64_t, int> gamma1t_label_;

  mutable bool orbits_built_ = false;
  mutable std::vector<StableCell> lambda1_, stable_vertices_;
  // Per level i < deg m: label of each SL_2(A/m) element and orbit data.
  mutable std::vector<std::uint64_t> elements_;
  mutable std::unordered_map<std::uint64_t, int> label_;
  mutable std::vector<std::uint64_t> label_rep_;
  mutable std::vector<std::vector<int>> edge_orbit_, vertex_orbit_;  // [i][label] -> orbit id
  mutable std::vector<std::vector<char>> edge_orbit_stable_, vertex_orbit_stable_;
  mutable std::vector<std::vector<int>> edge_orbit_rep_;  // [i][orbit] -> label
  mutable std::vector<std::vector<int>> edge_orbit_lambda_;  // [i][orbit] -> lambda1 index or -1
};

}  // namespace drinfeld

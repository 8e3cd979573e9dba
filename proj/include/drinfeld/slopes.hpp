#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "drinfeld/bounds.hpp"
#include "drinfeld/hecke.hpp"
#include "drinfeld/linalg.hpp"

namespace drinfeld {

using json = nlohmann::json;

struct SlopeTable {
  int k = 0;
  std::optional<int> chi;
  int dim = 0;
  std::vector<Segment> entries;  // increasing slopes
  int infinite = 0;              // dim minus the X-degree of det(I - U X)

  int mult(const Rational& a) const;
};

SlopeTable slope_table(const PolyMatrix& u, int k, std::optional<int> chi = std::nullopt);
SlopeTable slope_decomposition(CocycleEngine& eng, std::optional<int> chi = std::nullopt);

// Outcome of one checked claim.
struct Report {
  std::string claim;
  json params = json::object();
  json computed = json::object();
  json bound = json::object();
  bool pass = false;
  bool applicable = true;  // false when the claim's hypotheses fail

  std::string verdict() const;  // PASS, FAIL or NOT_APPLICABLE
  json to_json() const;
};

// s_i >= floor((i - 1) / d) for the elementary divisors of m.
Report check_eldiv_bound(const PolyMatrix& m, int d);

// Block shape of U^(k + p^n) against U^(k). With chi, the weight step is
// p^n (q^d - 1) and the blocks are checked as intertwining relations.
Report check_window(const QuotientData& qd, int k, int n, std::optional<int> chi = std::nullopt);

// d(k', a) = d(k, a) for all slopes a below the proved bound.
Report check_constancy(const QuotientData& qd, int k, int kprime, int n, std::optional<int> chi = std::nullopt);

// Gamma_0^p(t^r) against Gamma_0^p(t^r'): equal ordinary dimension, a unique
// character carrying it, and T_Q v = v on the ordinary line.
Report hida_check(const Field& f, const Poly& n, int k, int r, int rprime, const std::vector<Poly>& qs, int precision);

// Perturbation trials for the slope-agreement proposition.
struct PerturbConfig {
  BoundParams bp;  // eps0 is measured per trial and ignored here
  int dim = 6;
  int trials = 100;
  int maxdeg = 2;
  std::uint64_t seed = 1;
  int threads = 1;
};
Report perturb_trials(const Field& f, const PerturbConfig& cfg);
// B = diag(1, t), B' = diag(1, 0): a perturbation of size t^1 passed off as
// t^3. Returns the number of violated slopes (expected nonzero).
int perturb_negative_control(const Field& f);

// Elementary divisors of AB and BA dominate those of A.
Report kedlaya_trials(const Field& f, int trials, int maxdim, std::uint64_t seed, int threads = 1);

struct FamilyParams {
  int k1 = 10, k2 = 19;
  Rational a = Rational(1);
  Poly q;
  int n = 1;       // k2 = k1 mod p^n
  int nprime = 1;  // auxiliary exponent of the eigenvalue bound
  int precision = 0;  // 0: automatic
};
Report family_congruence(const QuotientData& qd, const FamilyParams& fp);

struct SlopeEigen {
  TruncSeries lambda_u;  // U-eigenvalue
  TruncSeries mu;        // T_Q-eigenvalue
  int reliable = 0;      // both known modulo t^reliable
};
// Eigen-data of the unique slope-a line (d(k, a) = 1, a integral).
SlopeEigen slope_eigen(CocycleEngine& eng, const Rational& a, const Poly& q, int precision);

}  // namespace drinfeld

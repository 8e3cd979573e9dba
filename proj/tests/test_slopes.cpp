#include <doctest.h>

#include <cmath>
#include <random>

#include "drinfeld/errors.hpp"
#include "drinfeld/slopes.hpp"
#include "oracles.hpp"

using namespace drinfeld;

namespace {
const Field& F3 = Field::prime(3);
Poly P(const std::string& s) { return parse_poly(F3, s); }

QuotientData make(const std::string& text) {
  Fq shift = 0;
  return QuotientData(F3, parse_level(F3, text, 1, &shift));
}

// Direct transcription of the two bounds, with q_l, r_l found by repeated
// subtraction and the minimum taken over a plain loop.
Rational oracle_c1(long long p, int n, int d0, int e0) {
  long long pn = std::llround(std::pow(p, n));
  return Rational(pn * (4 + d0 * pn - d0), 4 + 2 * d0 * pn - 2 * e0);
}

Rational oracle_c2(long long p, int n, int d0, int e0) {
  long long pn = std::llround(std::pow(p, n));
  Rational best(1 << 30);
  for (long long l = e0 + 1; l <= 1 + d0 * pn; ++l) {
    long long q = 0, r = 0;
    if (l > 1) {
      r = l - 2;
      while (r >= d0) {
        r -= d0;
        ++q;
      }
    }
    Rational v(2 * pn + d0 * q * (q - 1) + 2 * q * (r + 1), 2 * (l - e0));
    if (v < best) best = v;
  }
  return best;
}

}  // namespace

TEST_CASE("bounds at small parameters") {
  BoundParams bp{3, 1, 1, 1};
  CHECK(bound_C1(bp) == Rational(9, 4));
  CHECK(bound_C2(bp) == Rational(2));
  CHECK(bound_C(bp) == Rational(2));
  CHECK_THROWS_AS(bound_C(BoundParams{3, 1, 1, 2}), ConfigError);

  // D(n, 1, 1) = sqrt(2 p^n) - 1/2.
  for (int n = 1; n <= 4; ++n) {
    SqrtBound want{Rational(-1, 2), Rational(1), Rational(2 * static_cast<long long>(std::pow(3, n)))};
    CHECK(bound_D(BoundParams{3, n, 1, 1}).compare(want) == 0);
  }
  SqrtBound d = bound_D(bp);
  CHECK(d.compare(Rational(1)) > 0);
  CHECK(d.compare(Rational(2)) < 0);
  CHECK(std::abs(d.approx() - (std::sqrt(6.0) - 0.5)) < 1e-12);
  CHECK(d.str() == "sqrt(6) - 1/2");
}

TEST_CASE("bounds against the direct formulas") {
  std::mt19937_64 rng(3);
  for (int it = 0; it < 200; ++it) {
    const long long p = (rng() % 2) ? 2 : 3 + 2 * static_cast<long long>(rng() % 2);
    const int n = 1 + static_cast<int>(rng() % 3), d0 = 1 + static_cast<int>(rng() % 4);
    const int e0 = static_cast<int>(rng() % (d0 + 1));
    BoundParams bp{p, n, d0, e0};
    CAPTURE(p);
    CAPTURE(n);
    CAPTURE(d0);
    CAPTURE(e0);
    CHECK(bound_C1(bp) == oracle_c1(p, n, d0, e0));
    CHECK(bound_C2(bp) == oracle_c2(p, n, d0, e0));
    Rational c = bound_C(bp);
    CHECK(c > Rational(0));
    CHECK(c < Rational(bp.pn()));
    SqrtBound dd = bound_D(bp);
    CHECK(dd.compare(c) <= 0);
    CHECK(dd.compare(bound_D(BoundParams{p, n + 1, d0, e0})) <= 0);
    // The symbolic value agrees with floating point away from ties.
    double x = 2.0 * d0 * bp.pn() + (d0 - e0 + 1.0) * (2.0 * d0 - e0 - 1.0);
    double d2 = (std::sqrt(x) - 1.5 * d0 + e0) / d0;
    CHECK(std::abs(bound_D2(bp).approx() - d2) < 1e-9);
  }
}

TEST_CASE("exact square root comparisons") {
  SqrtBound a{Rational(0), Rational(1), Rational(2)};
  CHECK(a.compare(Rational(141, 100)) > 0);
  CHECK(a.compare(Rational(142, 100)) < 0);
  SqrtBound b{Rational(-1), Rational(1), Rational(8)};  // 2 sqrt 2 - 1 = sqrt 8 - 1
  SqrtBound c{Rational(-1), Rational(2), Rational(2)};
  CHECK(b.compare(c) == 0);
  CHECK(b.compare(a) > 0);
  CHECK(a.compare(b) < 0);
  CHECK(SqrtBound::exact(Rational(3)).compare(Rational(3)) == 0);
}

TEST_CASE("GM condition") {
  CHECK(gm_condition(BoundParams{3, 1, 1, 1}));
  CHECK_FALSE(gm_condition(BoundParams{2, 2, 3, 0}));
  // n >= 3 settles the p = 2 clause; the size condition still decides.
  CHECK_FALSE(gm_condition(BoundParams{2, 3, 3, 0}));  // 16 > 42 fails
  CHECK(gm_condition(BoundParams{2, 7, 1, 0}));        // 256 > 70
}

TEST_CASE("slope tables") {
  QuotientData qd = make("gamma1:t");
  CocycleEngine e2(qd, 2);
  SlopeTable t2 = slope_decomposition(e2);
  REQUIRE(t2.entries.size() == 1);
  CHECK(t2.mult(0) == 1);
  for (int k = 2; k <= 14; ++k) {
    CocycleEngine eng(qd, k);
    SlopeTable t = slope_decomposition(eng);
    int total = t.infinite;
    for (const Segment& s : t.entries) {
      CHECK(s.slope >= Rational(0));
      total += s.length;
    }
    CHECK(total == k - 1);
    CHECK(t.mult(0) == 1);
    if (k == 10) CHECK(t.mult(1) == 1);
  }
}

TEST_CASE("elementary divisor floor") {
  QuotientData qd = make("gamma1:t");
  for (int k = 4; k <= 10; ++k) CHECK(check_eldiv_bound(hecke_matrix(qd, k, P("t")), 1).pass);
  Report bad = check_eldiv_bound(identity_matrix(F3, 3), 1);
  CHECK_FALSE(bad.pass);
  CHECK(bad.computed["first_failure"] == 2);

  QuotientData q2 = make("gamma0p:t^2");
  CocycleEngine eng(q2, 5);
  PolyMatrix u = hecke_matrix(eng, P("t"));
  CHECK(check_eldiv_bound(u, q2.d()).pass);
  PolyMatrix uc = chi_part_matrix(eng, 1, u);
  CHECK(check_eldiv_bound(uc, q2.d()).pass);
}

TEST_CASE("window") {
  QuotientData qd = make("gamma1:t");
  for (int k = 3; k <= 6; ++k)
    for (int n : {0, 1, 2}) {
      CAPTURE(k);
      CAPTURE(n);
      CHECK(check_window(qd, k, n).pass);
      CHECK(check_window(qd, k, n, k % 2).pass);
    }
  CHECK(check_window(make("gamma0p:t^2"), 4, 1).pass);
}

TEST_CASE("constancy") {
  QuotientData qd = make("gamma1:t");
  Report r = check_constancy(qd, 4, 7, 1);
  CHECK(r.pass);
  CHECK(r.bound["C"] == "2");
  Report r2 = check_constancy(qd, 10, 19, 2);
  CHECK(r2.pass);
  CHECK(r2.computed["table_kprime"]["slopes"][1]["slope"] == "1");
  CHECK(r2.computed["table_kprime"]["slopes"][1]["mult"] == 1);
  CHECK(check_constancy(qd, 6, 6, 1).pass);
  CHECK(check_constancy(qd, 4, 10, 1, 0).pass);
  CHECK_THROWS_AS(check_constancy(qd, 4, 8, 1), ConfigError);
}

TEST_CASE("ordinary part in the t-power tower") {
  Poly one = Poly::constant(F3, 1);
  for (int k : {3, 4, 5}) {
    Report r = hida_check(F3, one, k, 1, 2, {P("t+1"), P("t^2+1")}, 16);
    CAPTURE(k);
    CHECK(r.pass);
  }
}

TEST_CASE("perturbations") {
  for (int d0 : {1, 2, 3}) {
    PerturbConfig cfg;
    cfg.bp = BoundParams{3, 1, d0, 0};
    cfg.trials = 40;
    cfg.seed = 7;
    Report r = perturb_trials(F3, cfg);
    CHECK(r.pass);
    cfg.threads = 3;
    CHECK(perturb_trials(F3, cfg).to_json() == r.to_json());
  }
  CHECK(perturb_negative_control(F3) > 0);
  CHECK(kedlaya_trials(F3, 60, 5, 2).pass);
}

TEST_CASE("slope one eigenvalues in weight 10") {
  QuotientData qd = make("gamma1:t");
  CocycleEngine eng(qd, 10);
  const int prec = 40;
  SlopeEigen u = slope_eigen(eng, Rational(1), P("t"), prec);
  REQUIRE(u.reliable >= 6);
  CHECK(u.lambda_u.with_precision(u.reliable) == TruncSeries(P("-t-t^3"), F3, u.reliable));
  CHECK(u.mu.with_precision(u.reliable) == TruncSeries(P("-t-t^3"), F3, u.reliable));
  SlopeEigen e = slope_eigen(eng, Rational(1), P("1+t"), prec);
  CHECK(e.mu.with_precision(e.reliable) == TruncSeries(P("1-t-t^3"), F3, e.reliable));
  // A second precision agrees on the common range.
  SlopeEigen e2 = slope_eigen(eng, Rational(1), P("1+t"), 2 * prec);
  CHECK(e2.mu.with_precision(e.reliable) == e.mu.with_precision(e.reliable));
  CHECK_THROWS_AS(slope_eigen(eng, Rational(4), P("t"), prec), ConfigError);
}

TEST_CASE("family congruence") {
  QuotientData qd = make("gamma1:t");
  for (const char* q : {"t", "1+t"}) {
    FamilyParams fp;
    fp.q = P(q);
    fp.n = 2;
    fp.nprime = 1;
    Report r = family_congruence(qd, fp);
    CAPTURE(q);
    CHECK(r.verdict() == "PASS");
    CHECK(r.computed["valuation"] == 9);
    CHECK(r.bound["valuation_greater_than"] == "5");
  }
  FamilyParams same;
  same.k2 = 10;
  same.q = P("t");
  same.n = 2;
  CHECK(family_congruence(qd, same).computed["valuation"] == "inf");
  FamilyParams weak;
  weak.q = P("t");
  weak.n = 1;  // p^n - p^n' - a < 0
  CHECK(family_congruence(qd, weak).verdict() == "NOT_APPLICABLE");
}

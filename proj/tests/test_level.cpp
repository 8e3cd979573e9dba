#include <doctest.h>

#include <random>

#include "drinfeld/errors.hpp"
#include "drinfeld/level.hpp"
#include "oracles.hpp"

using namespace drinfeld;

namespace {
const Field& F3 = Field::prime(3);
Poly P(const std::string& s) { return parse_poly(F3, s); }
const Poly kOne = Poly::constant(F3, 1);

QuotientData make(const std::string& text) {
  Fq shift = 0;
  return QuotientData(F3, parse_level(F3, text, 1, &shift));
}

// Random product of elementary matrices in Gamma_1(m).
Mat2 random_gamma(const QuotientData& qd, std::mt19937_64& rng, int len = 4) {
  Mat2 g = Mat2::identity(F3);
  for (int i = 0; i < len; ++i) {
    Poly x = oracle::random_poly(F3, 2, rng);
    if (i % 2)
      g = g * Mat2{kOne, x, Poly(F3), kOne};
    else
      g = g * Mat2{kOne, Poly(F3), qd.modulus() * x, kOne};
  }
  return g;
}
}  // namespace

TEST_CASE("level parsing") {
  Fq c = 9;
  LevelSpec l = parse_level(F3, "gamma0p:t^2", 1, &c);
  CHECK(c == 0);
  CHECK(l.r == 2);
  CHECK(l.theta == LevelSpec::Theta::Full);
  l = parse_level(F3, "gamma1:t+1,t", 1, &c);
  CHECK(l.n == P("t+1"));
  l = parse_level(F3, "gamma1:t^2+t", 1, &c);
  CHECK(l.n == P("t+1"));
  CHECK(l.r == 1);
  l = parse_level(F3, "gamma1:(t+1)^2", 1, &c);
  CHECK(c == 2);
  CHECK(l.r == 2);
  CHECK_THROWS_AS(parse_level(F3, "gamma5:t", 1, &c), ConfigError);
  CHECK_THROWS_AS(parse_level(F3, "gamma1:t^2+1", 1, &c), ConfigError);
}

TEST_CASE("lift to SL_2") {
  std::mt19937_64 rng(4);
  Poly m = P("t^3+t");
  for (int it = 0; it < 50; ++it) {
    Poly a = oracle::random_poly(F3, 2, rng), b = oracle::random_poly(F3, 2, rng);
    if (!gcd(a, m).is_one()) continue;
    ExtGcd eg = ext_gcd(a, m);
    Mat2 x{a, b, Poly(F3), eg.x % m};
    Mat2 y = lift_sl2(x, m);
    CHECK(y.det().is_one());
    CHECK(y.reduced_mod(m) == x.reduced_mod(m));
  }
}

TEST_CASE("index and stable cells") {
  struct Case {
    std::string level;
    int d;
  };
  for (const Case& cs : {Case{"gamma1:t", 1}, Case{"gamma0p:t^2", 3}, Case{"gamma1:t^2", 9}, Case{"gamma1:t+1,t", 8}}) {
    CAPTURE(cs.level);
    QuotientData qd = make(cs.level);
    CHECK(qd.d() == cs.d);
    CHECK(qd.coset_reps()[0] == Mat2::identity(F3));
    CHECK(static_cast<int>(qd.lambda1().size() - qd.stable_vertices().size()) == qd.d());
    for (int j = 0; j < qd.d(); ++j) {
      CHECK(qd.member_gamma1t(qd.coset_reps()[j]));
      CHECK(qd.coset_of(qd.coset_reps()[j]) == j);
      CHECK(qd.is_stable(qd.basis_edges()[j]));
    }
  }
  QuotientData g1 = make("gamma1:t");
  CHECK(g1.lambda1().size() == 1);
  CHECK(g1.stable_vertices().empty());
}

TEST_CASE("cosets are right Gamma cosets") {
  std::mt19937_64 rng(8);
  for (const char* lv : {"gamma0p:t^2", "gamma1:t^2"}) {
    QuotientData qd = make(lv);
    for (int it = 0; it < 40; ++it) {
      Mat2 g = random_gamma(qd, rng);
      REQUIRE(qd.member(g));
      int j = static_cast<int>(rng() % qd.d());
      CHECK(qd.coset_of(g * qd.coset_reps()[j]) == j);
    }
  }
  QuotientData qd = make("gamma0p:t^2");
  Mat2 th = lift_sl2({P("1+t"), Poly(F3), Poly(F3), P("1+2t")}, qd.modulus());
  CHECK(qd.member(th));
  CHECK_FALSE(make("gamma1:t^2").member(th));
}

TEST_CASE("edge classes are Gamma invariant") {
  std::mt19937_64 rng(12);
  QuotientData qd = make("gamma0p:t^2");
  int checked = 0;
  for (int it = 0; it < 60; ++it) {
    Mat2 h = random_gamma(qd, rng, 3) * Mat2{kOne, Poly(F3), oracle::random_poly(F3, 1, rng), kOne};
    OrientedEdge e = act(h, standard_edge(F3, static_cast<int>(rng() % 2)));
    if (!qd.is_stable(e)) continue;
    ++checked;
    EdgeClass ec = qd.edge_class(e);
    CHECK(qd.member(ec.gamma));
    const StableCell& cell = qd.lambda1()[ec.rep];
    OrientedEdge target = act(cell.h, standard_edge(F3, cell.i));
    OrientedEdge image = act(ec.gamma, e);
    CHECK((ec.sign == 1 ? image : image.reversed()) == target);
    Mat2 g = random_gamma(qd, rng);
    EdgeClass ec2 = qd.edge_class(act(g, e));
    CHECK(ec2.rep == ec.rep);
    CHECK(ec2.sign == ec.sign);
  }
  CHECK(checked > 10);
}

TEST_CASE("cusp directions and unstable cells") {
  QuotientData qd = make("gamma1:t");
  CHECK_FALSE(qd.is_stable(standard_edge(F3, 0)));
  CHECK_FALSE(qd.is_stable(standard_vertex(F3, 0)));
  CHECK(qd.cusp_direction(standard_vertex(F3, 0)) == standard_vertex(F3, 1));
  CHECK(qd.cusp_direction(standard_vertex(F3, 3)) == standard_vertex(F3, 4));
  TreeVertex v = act(qd.w(), standard_vertex(F3, 0));
  CHECK(v == standard_vertex(F3, 0));
  TreeVertex dir = qd.cusp_direction(act(qd.w(), standard_vertex(F3, 2)));
  CHECK(dir == act(qd.w(), standard_vertex(F3, 3)));
}

TEST_CASE("hecke cosets and diamond elements") {
  QuotientData qd = make("gamma1:t+1,t");
  CHECK(qd.hecke_cosets(P("t")).size() == 3);
  CHECK(qd.hecke_cosets(P("t+2")).size() == 4);
  CHECK(qd.hecke_cosets(P("t^2+1")).size() == 10);
  CHECK_THROWS_AS(qd.hecke_cosets(P("t^2+2")), ConfigError);
  for (const Mat2& x : qd.hecke_cosets(P("t+2"))) CHECK(x.det() == P("t+2"));
  for (Fq l = 1; l < 3; ++l) {
    Mat2 e = qd.eta(l);
    CHECK(e.det().is_one());
    Mat2 rn = e.reduced_mod(P("t+1"));
    CHECK(rn == Mat2::identity(F3).reduced_mod(P("t+1")));
    CHECK(e.a.coeff(0) == F3.inv(l));
    CHECK(e.d.coeff(0) == l);
    CHECK(e.c.coeff(0) == 0);
  }
}

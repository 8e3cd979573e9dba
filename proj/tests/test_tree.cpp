#include <doctest.h>

#include <random>
#include <set>

#include "drinfeld/tree.hpp"
#include "oracles.hpp"

using namespace drinfeld;

namespace {
const Field& F3 = Field::prime(3);

Mat2 random_sl2(const Field& f, std::mt19937_64& rng, int steps = 4) {
  Mat2 g = Mat2::identity(f);
  for (int s = 0; s < steps; ++s) {
    Poly x = oracle::random_poly(f, 2, rng);
    Mat2 e = s % 2 ? Mat2{Poly::constant(f, 1), x, Poly(f), Poly::constant(f, 1)}
                   : Mat2{Poly::constant(f, 1), Poly(f), x, Poly::constant(f, 1)};
    g = g * e;
  }
  return g;
}

TreeVertex random_vertex(const Field& f, std::mt19937_64& rng) {
  TreeVertex v = standard_vertex(f, static_cast<int>(rng() % 3));
  int len = static_cast<int>(rng() % 6);
  for (int i = 0; i < len; ++i) {
    auto nb = neighbors(f, v);
    v = nb[rng() % nb.size()];
  }
  return v;
}
}  // namespace

TEST_CASE("neighbors are symmetric and distinct") {
  std::mt19937_64 rng(1);
  for (int it = 0; it < 50; ++it) {
    TreeVertex v = random_vertex(F3, rng);
    auto nb = neighbors(F3, v);
    CHECK(std::set<TreeVertex>(nb.begin(), nb.end()).size() == 4);
    for (const auto& w : nb) {
      CHECK(adjacent(v, w));
      CHECK(adjacent(w, v));
      auto back = neighbors(F3, w);
      CHECK(std::find(back.begin(), back.end(), v) != back.end());
    }
  }
}

TEST_CASE("action is a group action preserving adjacency") {
  std::mt19937_64 rng(2);
  for (int it = 0; it < 50; ++it) {
    Mat2 g = random_sl2(F3, rng), h = random_sl2(F3, rng);
    TreeVertex v = random_vertex(F3, rng);
    CHECK(act(g * h, v) == act(g, act(h, v)));
    for (const auto& w : neighbors(F3, v)) CHECK(adjacent(act(g, v), act(g, w)));
    // Scalars act trivially; so do non-unimodular multiples.
    Poly s = Poly::from_int(F3, 2) * Poly::t(F3);
    CHECK(act(Mat2{g.a * s, g.b * s, g.c * s, g.d * s}, v) == act(g, v));
  }
}

TEST_CASE("w swaps v_n and v_-n") {
  Mat2 w = Mat2::from_ints(F3, 0, 1, -1, 0);
  for (int n = -3; n <= 3; ++n) CHECK(act(w, standard_vertex(F3, n)) == standard_vertex(F3, -n));
  Mat2 d{Poly::t(F3), Poly(F3), Poly(F3), Poly::constant(F3, 1)};
  CHECK(act(d, standard_vertex(F3, 0)) == standard_vertex(F3, 1));
}

TEST_CASE("reduction to the standard half-line") {
  std::mt19937_64 rng(3);
  for (int it = 0; it < 200; ++it) {
    TreeVertex v = act(random_sl2(F3, rng), random_vertex(F3, rng));
    auto r = reduce_vertex(F3, v);
    CHECK(r.g.det().is_one());
    CHECK(act(r.g, v) == standard_vertex(F3, r.i));
    auto nb = neighbors(F3, v);
    OrientedEdge e{v, nb[rng() % nb.size()]};
    auto er = reduce_edge(F3, e);
    CHECK(er.g.det().is_one());
    OrientedEdge img = act(er.g, e);
    OrientedEdge std_e = standard_edge(F3, er.i);
    CHECK(img == (er.sign > 0 ? std_e : std_e.reversed()));
  }
}

TEST_CASE("standard stabilizers") {
  for (int i = 0; i < 3; ++i) {
    for (const auto& s : std_vertex_stabilizer(F3, i)) CHECK(act(s, standard_vertex(F3, i)) == standard_vertex(F3, i));
    for (const auto& s : std_edge_stabilizer(F3, i)) CHECK(act(s, standard_edge(F3, i)) == standard_edge(F3, i));
  }
  CHECK(std_vertex_stabilizer(F3, 0).size() == 24);
  CHECK(std_edge_stabilizer(F3, 0).size() == 6);
  CHECK(std_edge_stabilizer(F3, 2).size() == 54);
}

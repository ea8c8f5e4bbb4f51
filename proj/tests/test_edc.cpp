#include <algorithm>
#include <cstdint>
#include <vector>

#include "doctest.h"
#include "fixtures.hpp"
#include "oracle.hpp"
#include "sgh/edc.hpp"

using namespace sgh;
using fixtures::digon;
using fixtures::neg_cycle;
using fixtures::pos_cycle;
using fixtures::seeded_graph;

namespace {

// Exchanges the two cover vertices of every base vertex in `set`.
SignedGraph swap_sides(const SignedGraph& cover, const std::vector<int>& set) {
  std::vector<int> perm(cover.order());
  for (int v = 0; v < cover.order(); ++v) perm[v] = v;
  for (int b : set) {
    perm[cover_plus(b)] = cover_minus(b);
    perm[cover_minus(b)] = cover_plus(b);
  }
  return fixtures::relabel(cover, perm);
}

}  // namespace

TEST_CASE("the cover of a one-negative 4-cycle is the 8-spoke ladder") {
  CoverMap map;
  SignedGraph cover = extended_double_cover(neg_cycle(4), &map);
  CHECK(cover.order() == 8);
  CHECK(cover.edges().size() == 12);

  for (int v = 0; v < 4; ++v) {
    const SignedEdge& rung = cover.edge(map.rung_edge[v]);
    CHECK(negative(rung.sign));
    CHECK(std::min(rung.u, rung.v) == cover_plus(v));
    CHECK(std::max(rung.u, rung.v) == cover_minus(v));
  }
  // Positive base edges lift straight, the negative one crosses.
  for (int e = 0; e < 4; ++e) {
    const SignedEdge& base = neg_cycle(4).edge(e);
    for (int ce : map.edge_pair[e]) {
      const SignedEdge& im = cover.edge(ce);
      CHECK(im.sign == Sign::Plus);
      bool crosses = cover_minus_side(im.u) != cover_minus_side(im.v);
      CHECK(crosses == negative(base.sign));
      CHECK(cover_base(im.u) != cover_base(im.v));
    }
  }

  GirthVector v = walk_girths(cover);
  CHECK(v == negative_cycle_reference(5));
  CHECK(v == oracle::table_walk_girths(cover));
}

TEST_CASE("cover girths transform the base vector one slot at a time") {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    SignedGraph g = seeded_graph(3 + static_cast<int>(seed % 5), 1000 + seed, 4);
    GirthVector base = walk_girths(g);
    GirthVector cover = walk_girths(extended_double_cover(g));
    CAPTURE(seed);
    CHECK(cover.g00() == Girth(2));
    CHECK(cover.g01() == base.g01());
    CHECK(cover.g10() == base.g11().plus_one());
    CHECK(cover.g11() == base.g10().plus_one());
  }
}

TEST_CASE("a single vertex covers to a single negative edge") {
  SignedGraph cover = extended_double_cover(SignedGraph(1));
  CHECK(cover.order() == 2);
  REQUIRE(cover.edges().size() == 1);
  CHECK(negative(cover.edge(0).sign));
}

TEST_CASE("loops cover by sign: positive doubles, negative folds to a digon") {
  SignedGraph pos(1, {{0, 0, Sign::Plus}});
  SignedGraph pc = extended_double_cover(pos);
  int loops = 0;
  for (const SignedEdge& e : pc.edges())
    if (e.u == e.v) {
      ++loops;
      CHECK(e.sign == Sign::Plus);
    }
  CHECK(loops == 2);

  SignedGraph neg(1, {{0, 0, Sign::Minus}});
  SignedGraph nc = extended_double_cover(neg);
  CHECK(nc.order() == 2);
  CHECK(nc.edges().size() == 2);
  CHECK(same_signature(nc, digon()));
}

TEST_CASE("projective cubes start at the digon and count their edges") {
  CHECK(same_signature(signed_projective_cube(1), digon()));
  for (int k = 1; k <= 6; ++k) {
    SignedGraph q = signed_projective_cube(k);
    CHECK(q.order() == (1 << k));
    int pos = 0, negs = 0;
    for (const SignedEdge& e : q.edges()) (negative(e.sign) ? negs : pos)++;
    CHECK(pos == k * (1 << (k - 1)));
    CHECK(negs == 1 << (k - 1));
  }
  CHECK(walk_girths(signed_projective_cube(2)) == negative_cycle_reference(3));
  for (int k = 1; k <= 5; ++k)
    CHECK(walk_girths(signed_projective_cube(k)) == negative_cycle_reference(k + 1));
}

TEST_CASE("covering a projective cube yields the next one") {
  for (int k = 2; k <= 6; ++k) {
    SignedGraph cover = extended_double_cover(signed_projective_cube(k - 1));
    std::vector<int> relabel = projective_cube_relabel(k);
    std::vector<int> sorted = relabel;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < static_cast<int>(sorted.size()); ++i) CHECK(sorted[i] == i);
    CHECK(same_signature(fixtures::relabel(cover, relabel), signed_projective_cube(k)));
  }
}

TEST_CASE("lifted walks keep their length and close over the rung") {
  SignedGraph c4 = neg_cycle(4);

  Walk back_and_forth{0, {0, 0, 0, 0}};
  Walk lifted = lift_walk(c4, back_and_forth, Sign::Plus);
  SignedGraph cover = extended_double_cover(c4);
  CHECK(lifted.edges.size() == 4);
  CHECK(lifted.start == cover_plus(0));
  CHECK(walk_valid(cover, lifted));
  CHECK(walk_end(cover, lifted) == cover_plus(0));
  CHECK(walk_sign(cover, lifted) == Sign::Plus);

  Walk around{0, {0, 1, 2, 3}};
  Walk neg_lift = lift_walk(c4, around, Sign::Plus);
  CHECK(neg_lift.edges.size() == 5);
  CHECK(walk_valid(cover, neg_lift));
  CHECK(walk_end(cover, neg_lift) == cover_plus(0));
  CHECK(walk_sign(cover, neg_lift) == Sign::Minus);

  Walk from_minus = lift_walk(c4, around, Sign::Minus);
  CHECK(from_minus.start == cover_minus(0));
  CHECK(from_minus.edges.size() == 5);
  CHECK(walk_end(cover, from_minus) == cover_minus(0));

  Walk doubled{0, {0, 1, 2, 3, 0, 1, 2, 3}};
  Walk even_lift = lift_walk(c4, doubled, Sign::Plus);
  CHECK(even_lift.edges.size() == 8);
  CHECK(walk_end(cover, even_lift) == cover_plus(0));
  CHECK(walk_sign(cover, even_lift) == Sign::Plus);
}

TEST_CASE("cover reachability mirrors base reachability by side and sign") {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    SignedGraph g = seeded_graph(5, 1100 + seed, 3);
    SignedGraph cover = extended_double_cover(g);
    for (int u = 0; u < g.order(); ++u) {
      for (int v = 0; v < g.order(); ++v) {
        for (int p = 1; p <= 7; ++p) {
          CAPTURE(seed);
          CAPTURE(u);
          CAPTURE(v);
          CAPTURE(p);
          bool base_pos = oracle::walk_of_length_exists(g, u, v, p, Sign::Plus);
          bool base_neg = oracle::walk_of_length_exists(g, u, v, p, Sign::Minus);
          CHECK(oracle::walk_of_length_exists(cover, cover_plus(u), cover_plus(v), p,
                                              Sign::Plus) == base_pos);
          CHECK(oracle::walk_of_length_exists(cover, cover_plus(u), cover_minus(v), p,
                                              Sign::Plus) == base_neg);
          CHECK(oracle::walk_of_length_exists(cover, cover_plus(u), cover_plus(v), p,
                                              Sign::Minus) ==
                oracle::walk_of_length_exists(g, u, v, p - 1, Sign::Minus));
          CHECK(oracle::walk_of_length_exists(cover, cover_plus(u), cover_minus(v), p,
                                              Sign::Minus) ==
                oracle::walk_of_length_exists(g, u, v, p - 1, Sign::Plus));
        }
      }
    }
  }
}

TEST_CASE("cycle pairs lift to cycle pairs on the matching sides") {
  for (int g : {4, 5}) {
    SignedGraph base = neg_cycle(g);
    auto cycles = oracle::simple_cycles(extended_double_cover(base), g + 1);
    for (int x = 0; x < g; ++x)
      for (int y = 0; y < g; ++y) {
        CAPTURE(g);
        CAPTURE(x);
        CAPTURE(y);
        for (int sx : {0, 1})
          for (int sy : {0, 1})
            CHECK(oracle::any_cycle_through(cycles, Sign::Minus, g + 1, 2 * x + sx, 2 * y + sy));
      }
  }
  for (int g : {4, 5}) {
    SignedGraph base = pos_cycle(g);
    auto cycles = oracle::simple_cycles(extended_double_cover(base), g);
    for (int x = 0; x < g; ++x)
      for (int y = 0; y < g; ++y) {
        CHECK(oracle::any_cycle_through(cycles, Sign::Plus, g, 2 * x, 2 * y));
        CHECK(oracle::any_cycle_through(cycles, Sign::Plus, g, 2 * x + 1, 2 * y + 1));
      }
  }
}

TEST_CASE("switching the base relabels the cover across its spokes") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    SignedGraph g = seeded_graph(6, 1200 + seed, 4);
    std::vector<int> set;
    for (int v = 0; v < g.order(); ++v)
      if ((seed >> v) & 1) set.push_back(v);
    SignedGraph a = extended_double_cover(switched(g, Switching{set}));
    SignedGraph b = swap_sides(extended_double_cover(g), set);
    CHECK(same_signature(a, b));
  }
}

TEST_CASE("weighted cover of one positive edge lists both route pairs") {
  WeightedSignedGraph base(2, {{0, 1, 2}});
  WeightedSignedGraph cover = extended_double_cover(base);
  REQUIRE(cover.edges().size() == 6);
  auto has = [&](int u, int v, int w) {
    for (const WeightedEdge& e : cover.edges())
      if (std::min(e.u, e.v) == std::min(u, v) && std::max(e.u, e.v) == std::max(u, v) &&
          e.weight == w)
        return true;
    return false;
  };
  CHECK(has(0, 1, -1));
  CHECK(has(2, 3, -1));
  CHECK(has(0, 2, 2));
  CHECK(has(1, 3, 2));
  CHECK(has(0, 3, -3));
  CHECK(has(1, 2, -3));

  WeightedSignedGraph negbase(2, {{0, 1, -1}});
  WeightedSignedGraph negcover = extended_double_cover(negbase);
  auto hasn = [&](int u, int v, int w) {
    for (const WeightedEdge& e : negcover.edges())
      if (std::min(e.u, e.v) == std::min(u, v) && std::max(e.u, e.v) == std::max(u, v) &&
          e.weight == w)
        return true;
    return false;
  };
  CHECK(hasn(0, 3, 1));
  CHECK(hasn(1, 2, 1));
  CHECK(hasn(0, 2, -2));
  CHECK(hasn(1, 3, -2));
}

TEST_CASE("weighted cover girths follow the same slot transform") {
  WeightedSignedGraph pair(2, {{0, 1, 3}, {0, 1, -3}});
  GirthVector base = weighted_walk_girths(pair);
  GirthVector cover = weighted_walk_girths(extended_double_cover(pair));
  CHECK(cover.g00() == Girth(2));
  CHECK(cover.g01() == base.g01());
  CHECK(cover.g10() == base.g11().plus_one());
  CHECK(cover.g11() == base.g10().plus_one());
  CHECK(cover == oracle::table_walk_girths(extended_double_cover(pair)));
}

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "fixtures.hpp"
#include "oracle.hpp"
#include "sgh/distance.hpp"
#include "sgh/edc.hpp"
#include "sgh/tube.hpp"

using namespace sgh;
using fixtures::neg_cycle;
using fixtures::pos_cycle;

namespace {

// Two one-negative 4-cycles sharing vertex 0.
SignedGraph figure_eight() {
  return SignedGraph(7, {{0, 1, Sign::Plus}, {1, 2, Sign::Plus}, {2, 3, Sign::Plus},
                         {3, 0, Sign::Minus}, {0, 4, Sign::Plus}, {4, 5, Sign::Plus},
                         {5, 6, Sign::Plus}, {6, 0, Sign::Minus}});
}

std::optional<int> find_weight(const WeightedSignedGraph& g, int u, int v) {
  for (const WeightedEdge& e : g.edges())
    if (std::min(e.u, e.v) == std::min(u, v) && std::max(e.u, e.v) == std::max(u, v))
      return e.weight;
  return std::nullopt;
}

}  // namespace

TEST_CASE("algebraic distance carries the sign of a shortest path") {
  SignedGraph c5 = neg_cycle(5);
  int expect[5][5] = {{0, 1, 2, -2, -1},
                      {1, 0, 1, 2, -2},
                      {2, 1, 0, 1, 2},
                      {-2, 2, 1, 0, 1},
                      {-1, -2, 2, 1, 0}};
  for (int u = 0; u < 5; ++u)
    for (int v = 0; v < 5; ++v) {
      if (u == v) continue;
      CHECK(algebraic_distance(c5, u, v) == expect[u][v]);
      CHECK(algebraic_distance(c5, u, v) == oracle::table_algebraic_distance(c5, u, v));
    }
  CHECK_THROWS_AS(algebraic_distance(c5, 2, 2), std::invalid_argument);
  CHECK_THROWS_AS(algebraic_distance(c5, 0, 9), std::out_of_range);
  CHECK_THROWS_AS(algebraic_distance(SignedGraph(3, {{0, 1, Sign::Plus}}), 0, 1),
                  std::invalid_argument);
}

TEST_CASE("seam neighbours of the twisted tube sit at distance minus one") {
  SignedGraph tt = twisted_tube(6);
  TubeDims d = tube_dims(6);
  int a = tube_vertex(d, {0, d.rows - 1});
  int b = tube_vertex(d, {d.half_cols, 0});
  CHECK(algebraic_distance(tt, a, b) == -1);
  CHECK(girth_transform(-1, 6) == 5);
}

TEST_CASE("the girth transform folds negatives into the upper weight range") {
  CHECK(girth_transform(1, 5) == 1);
  CHECK(girth_transform(2, 5) == 2);
  CHECK(girth_transform(-1, 5) == 4);
  CHECK(girth_transform(-2, 5) == 3);
  CHECK(girth_transform(3, 7) == 3);
  CHECK(girth_transform(-3, 7) == 4);
  CHECK(girth_transform(4, 8) == 4);
  CHECK(girth_transform(-1, 8) == 7);
  CHECK_THROWS_AS(girth_transform(0, 5), std::invalid_argument);
  CHECK_THROWS_AS(girth_transform(3, 5), std::invalid_argument);
  CHECK_THROWS_AS(girth_transform(-3, 5), std::invalid_argument);
  CHECK_THROWS_AS(girth_transform(5, 8), std::invalid_argument);
  CHECK_THROWS_AS(girth_transform(-4, 8), std::invalid_argument);
  CHECK_THROWS_AS(girth_transform(1, 0), std::invalid_argument);
}

TEST_CASE("negative cycle search finds exact-length simple witnesses") {
  SignedGraph c5 = neg_cycle(5);
  auto cyc = negative_cycle_through(c5, 0, 2, 5);
  REQUIRE(cyc.has_value());
  CHECK(std::set<int>(cyc->begin(), cyc->end()) == std::set<int>{0, 1, 2, 3, 4});
  CHECK_FALSE(negative_cycle_through(c5, 0, 2, 4).has_value());
  CHECK_FALSE(negative_cycle_through(pos_cycle(5), 0, 2, 5).has_value());
  CHECK_FALSE(negative_cycle_through(c5, 0, 2, 6).has_value());
  CHECK_THROWS_AS(negative_cycle_through(c5, 0, 2, 0), std::invalid_argument);
  CHECK_THROWS_AS(negative_cycle_through(c5, 0, 9, 5), std::out_of_range);

  auto w = negative_cycle_walk(c5, 1, 3, 5);
  REQUIRE(w.has_value());
  CHECK(w->start == 1);
  CHECK(w->edges.size() == 5);
  CHECK(walk_end(c5, *w) == 1);
  CHECK(negative(walk_sign(c5, *w)));
}

TEST_CASE("cut vertices separate negative cycles") {
  SignedGraph f8 = figure_eight();
  for (int len = 1; len <= 7; ++len) CHECK_FALSE(on_common_negative_cycle(f8, 1, 4, len));
  CHECK(on_common_negative_cycle(f8, 1, 3, 4));
  CHECK(on_common_negative_cycle(f8, 4, 4, 4));
  CHECK(on_common_negative_cycle(f8, 0, 5, 4));
}

TEST_CASE("the distance graph of a negative 5-cycle uses every weight once per row") {
  SignedGraph c5 = neg_cycle(5);
  std::vector<VertexPair> pairs;
  for (int u = 0; u < 5; ++u)
    for (int v = u + 1; v < 5; ++v) pairs.push_back({u, v});
  WeightedSignedGraph d = girth_transformed_distance_graph(c5, pairs, 5);
  CHECK(d.order() == 5);
  CHECK(d.edges().size() == 10);
  for (int u = 0; u < 5; ++u)
    for (int v = u + 1; v < 5; ++v) CHECK(find_weight(d, u, v) == v - u);
}

TEST_CASE("distance graph construction polices its inputs") {
  CHECK(girth_transformed_distance_graph(neg_cycle(5), {}, 5).edges().empty());
  CHECK_THROWS_AS(girth_transformed_distance_graph(neg_cycle(4), {{0, 1}}, 5),
                  std::invalid_argument);
  CHECK_THROWS_AS(girth_transformed_distance_graph(neg_cycle(5), {{2, 2}}, 5),
                  std::invalid_argument);
  SignedGraph f8 = figure_eight();
  CHECK_THROWS_AS(girth_transformed_distance_graph(f8, {{1, 4}}, 4), std::invalid_argument);
  WeightedSignedGraph loose = girth_transformed_distance_graph(f8, {{1, 4}}, 4, false);
  CHECK(find_weight(loose, 1, 4) == 2);
}

TEST_CASE("the tube certificate at girth 5 is closed both ways") {
  Certificate c = tube_certificate(5);
  CHECK(c.base.order() == 12);
  CHECK(c.dist_graph.edges().size() == 66);
  CHECK(c.triangles.size() == 220);
  TriangleSet ts{c.dist_graph, c.triangles};
  CHECK(closure_violations(ts, 5).empty());
  CHECK(closure_violations_serial(ts, 5).empty());
  CHECK(is_girth_closed(ts, 5));
  CHECK(certificate_problems(c).empty());
}

TEST_CASE("removing the triangles around one edge starves its neighbours") {
  Certificate c = tube_certificate(5);
  const WeightedEdge& e0 = c.dist_graph.edge(0);
  int a = e0.u, b = e0.v;
  std::vector<Triangle> kept;
  for (const Triangle& t : c.triangles) {
    bool has_a = t[0] == a || t[1] == a || t[2] == a;
    bool has_b = t[0] == b || t[1] == b || t[2] == b;
    if (!(has_a && has_b)) kept.push_back(t);
  }
  auto viols = closure_violations({c.dist_graph, kept}, 5);
  std::set<std::array<int, 5>> got;
  for (const ClosureViolation& v : viols) got.insert({v.u, v.v, v.p, v.q, v.r});
  std::set<std::array<int, 5>> want{
      {0, 2, 2, 1, 1}, {0, 2, 2, 4, 4}, {1, 8, 3, 1, 4}, {1, 8, 3, 4, 1}};
  CHECK(got == want);
  for (const ClosureViolation& v : viols)
    CHECK((v.u == a || v.v == a || v.u == b || v.v == b));
}

TEST_CASE("an empty triangle family is vacuously closed but certifies nothing") {
  Certificate c = tube_certificate(5);
  CHECK(is_girth_closed({c.dist_graph, {}}, 5));
  Certificate gutted{c.base, 5, c.dist_graph, {}};
  auto problems = certificate_problems(gutted);
  REQUIRE_FALSE(problems.empty());
  CHECK_THROWS_AS(validate_certificate(gutted), std::invalid_argument);
}

TEST_CASE("closure input validation rejects malformed hosts") {
  WeightedSignedGraph heavy(3, {{0, 1, 9}});
  CHECK_THROWS_AS(closure_violations({heavy, {}}, 5), std::invalid_argument);
  WeightedSignedGraph par(3, {{0, 1, 1}, {0, 1, 2}});
  CHECK_THROWS_AS(closure_violations({par, {}}, 5), std::invalid_argument);
  WeightedSignedGraph host(3, {{0, 1, 1}, {1, 2, 1}});
  CHECK_THROWS_AS(closure_violations({host, {{0, 1, 2}}}, 5), std::invalid_argument);
  WeightedSignedGraph tri(3, {{0, 1, 2}, {1, 2, 2}, {0, 2, 2}});
  CHECK_THROWS_AS(closure_violations({tri, {{1, 0, 2}}}, 5), std::invalid_argument);
}

TEST_CASE("a tampered distance weight shows up as a certificate problem") {
  Certificate c = tube_certificate(5);
  std::vector<WeightedEdge> edges = c.dist_graph.edges();
  edges[0].weight = edges[0].weight == 1 ? 2 : 1;
  Certificate bent{c.base, 5, WeightedSignedGraph(c.dist_graph.order(), edges), c.triangles};
  CHECK_FALSE(certificate_problems(bent).empty());
}

TEST_CASE("certification succeeds on the tube and fails on the bare cycle") {
  for (int g : {2, 3, 5}) {
    auto c = certify_sp_complete(twisted_tube(g), g);
    REQUIRE(c.has_value());
    validate_certificate(*c);
  }
  auto c5 = certify_sp_complete(twisted_tube(5), 5);
  CHECK(c5->dist_graph.edges().size() == 66);
  CHECK(c5->triangles.size() == 220);

  CHECK_FALSE(certify_sp_complete(neg_cycle(5), 5).has_value());
  CHECK_THROWS_AS(certify_sp_complete(neg_cycle(4), 5), std::invalid_argument);
}

TEST_CASE("projective cubes certify at the girth after their dimension") {
  for (int g : {2, 3, 4}) {
    auto c = certify_sp_complete(signed_projective_cube(g - 1), g);
    REQUIRE(c.has_value());
    validate_certificate(*c);
  }
}

TEST_CASE("the negative loop certificate lifts through digon and cube") {
  SignedGraph loop(1, {{0, 0, Sign::Minus}});
  auto c1 = certify_sp_complete(loop, 1);
  REQUIRE(c1.has_value());
  CHECK(c1->dist_graph.edges().empty());
  CHECK(c1->triangles.empty());

  Certificate c2 = lift_certificate(*c1);
  CHECK(c2.girth == 2);
  CHECK(c2.base.order() == 2);
  REQUIRE(c2.dist_graph.edges().size() == 1);
  CHECK(c2.dist_graph.edge(0).weight == 1);
  CHECK(c2.triangles.empty());

  Certificate c3 = lift_certificate(c2);
  CHECK(c3.girth == 3);
  CHECK(c3.base.order() == 4);
  CHECK(c3.dist_graph.edges().size() == 6);
  REQUIRE(c3.triangles.size() == 4);
  for (const Triangle& t : c3.triangles) {
    std::multiset<int> ws;
    ws.insert(*find_weight(c3.dist_graph, t[0], t[1]));
    ws.insert(*find_weight(c3.dist_graph, t[1], t[2]));
    ws.insert(*find_weight(c3.dist_graph, t[0], t[2]));
    CHECK(ws == std::multiset<int>{1, 1, 2});
  }

  Certificate c4 = lift_certificate(c3);
  CHECK(c4.girth == 4);
  CHECK(c4.base.order() == 8);
  CHECK(c4.dist_graph.edges().size() == 28);
  CHECK(certificate_problems(c4).empty());
}

TEST_CASE("lifting the girth-4 tube certificate closes at girth 5") {
  Certificate lifted = lift_certificate(tube_certificate(4));
  CHECK(lifted.girth == 5);
  CHECK(lifted.base.order() == 16);
  CHECK(lifted.dist_graph.edges().size() == 120);
  CHECK(lifted.triangles.size() == 560);
  validate_certificate(lifted);
}

TEST_CASE("lifted weights pair up across the spokes to the old girth") {
  Certificate base = tube_certificate(4);
  Certificate lifted = lift_certificate(base);
  int g = base.girth;
  for (const WeightedEdge& e : lifted.dist_graph.edges()) {
    if (cover_base(e.u) == cover_base(e.v)) {
      CHECK(e.weight == g);  // spoke
      continue;
    }
    auto mirror = find_weight(lifted.dist_graph, e.u, e.v ^ 1);
    REQUIRE(mirror.has_value());
    CHECK(e.weight + *mirror == g);
  }
}

TEST_CASE("underlying distance between cycle mates is decided inside the cycle") {
  SignedGraph tt = twisted_tube(5);
  Certificate c = tube_certificate(5);
  for (const WeightedEdge& e : c.dist_graph.edges()) {
    auto cyc = negative_cycle_through(tt, e.u, e.v, 5);
    REQUIRE(cyc.has_value());
    int iu = static_cast<int>(std::find(cyc->begin(), cyc->end(), e.u) - cyc->begin());
    int iv = static_cast<int>(std::find(cyc->begin(), cyc->end(), e.v) - cyc->begin());
    int k = std::abs(iu - iv);
    CHECK(oracle::bfs_distance(tt, e.u, e.v) == std::min(k, 5 - k));
  }
}

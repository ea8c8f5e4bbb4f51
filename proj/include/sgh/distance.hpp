#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "sgh/signed_graph.hpp"
#include "sgh/weighted_graph.hpp"

namespace sgh {

// Signed shortest-path distance: +d(u,v) when some shortest u-v path is
// positive, -d(u,v) otherwise. Undefined for u == v.
int algebraic_distance(const SignedGraph& g, int u, int v);
// Full row from u; the entry at u itself is 0 and carries no meaning.
std::vector<int> algebraic_distances_from(const SignedGraph& g, int u);

// Maps an algebraic distance x (with -ceil(g/2) < x <= floor(g/2), x != 0)
// into the weight range [1, g-1]: x for positive x, g + x for negative x.
int girth_transform(int x, int g);

// Simple negative cycle with exactly `length` edges through u and v (u == v
// asks for a cycle through one vertex). Returns the cycle's vertex sequence.
std::optional<std::vector<int>> negative_cycle_through(const SignedGraph& g, int u, int v,
                                                       int length);
// Same search, as a closed walk from u carrying the edge ids.
std::optional<Walk> negative_cycle_walk(const SignedGraph& g, int u, int v, int length);
inline bool on_common_negative_cycle(const SignedGraph& g, int u, int v, int length) {
  return negative_cycle_through(g, u, v, length).has_value();
}

struct VertexPair {
  int u, v;
};

// One edge per requested pair, weighing girth_transform(algebraic_distance).
// With check_cycles, every pair must sit on a common negative g-cycle.
WeightedSignedGraph girth_transformed_distance_graph(const SignedGraph& base,
                                                     const std::vector<VertexPair>& pairs, int g,
                                                     bool check_cycles = true);

using Triangle = std::array<int, 3>;  // vertex ids, ascending

// Triangle family over a positively weighted host. The checked edge set is
// the union of the triangles' edges, not all host edges.
struct TriangleSet {
  WeightedSignedGraph host;
  std::vector<Triangle> triangles;
};

struct ClosureViolation {
  int u, v;      // host edge, u < v
  int p, q, r;   // the triple with no completing triangle
  friend bool operator==(const ClosureViolation&, const ClosureViolation&) = default;
};

// An edge uv of weight p is closed for (p,q,r) when some triangle uvz has
// (w(zu), w(zv)) equal to (q,r) or (g-q, g-r). Checks every wide triple with
// positive entries below g against every triangle edge.
std::vector<ClosureViolation> closure_violations(const TriangleSet& t, int g);
std::vector<ClosureViolation> closure_violations_serial(const TriangleSet& t, int g);
inline bool is_girth_closed(const TriangleSet& t, int g) {
  return closure_violations(t, g).empty();
}

// Self-contained evidence that `base` bounds its girth class: a
// girth-transformed distance graph plus a closed triangle family. Bases on at
// most two vertices carry no triangles and are accepted with an empty family
// when their girth vector is exactly the reference vector.
struct Certificate {
  SignedGraph base;
  int girth = 0;
  WeightedSignedGraph dist_graph;
  std::vector<Triangle> triangles;
};

// Every invariant breach, empty when valid.
std::vector<std::string> certificate_problems(const Certificate& c);
void validate_certificate(const Certificate& c);

// Greatest-fixpoint search: start from all pairs on common negative g-cycles
// and all triangles of the resulting distance graph, then delete violated
// edges in batches until closed. Absence of a certificate proves nothing.
std::optional<Certificate> certify_sp_complete(const SignedGraph& base, int g);

// Certificate for the extended double cover at girth g+1: rungs weigh g, a
// weight-w distance edge contributes the straight pair at w and the crossing
// pair at g-w, and the triangle family is every triangle of the new graph.
// Verification failure throws, it would falsify the construction.
Certificate lift_certificate(const Certificate& c);

}  // namespace sgh

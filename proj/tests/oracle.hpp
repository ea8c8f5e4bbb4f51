#pragma once

#include <cstdint>
#include <vector>

#include "sgh/girth.hpp"
#include "sgh/signed_graph.hpp"
#include "sgh/weighted_graph.hpp"

// Reference recomputations for the test suite. Everything here goes through
// exact-length reachability tables or plain exhaustive search, so none of it
// shares code with the library's searches.
namespace sgh::oracle {

// Closed-walk girths per type, from layered exact-length tables. The layer
// cap 4n (4n times the weight bound when weighted) covers any minimal
// type-realising closed walk: two cycles plus a doubled connecting path.
GirthVector table_walk_girths(const SignedGraph& g);
GirthVector table_walk_girths(const WeightedSignedGraph& g);

// Shortest u-v walk lengths by walk sign; infinite when no such walk exists.
struct SignedReach {
  Girth positive, negative;
};
std::vector<SignedReach> table_signed_reach(const SignedGraph& g, int u);

// True when a u-v walk of this exact length and sign exists.
bool walk_of_length_exists(const SignedGraph& g, int u, int v, int length, Sign sign);

// Signed distance rebuilt from the reach table: the magnitude is the
// underlying distance and the sign is positive exactly when a positive walk
// realises it.
int table_algebraic_distance(const SignedGraph& g, int u, int v);

// Plain breadth-first distance on the underlying multigraph, -1 if separated.
int bfs_distance(const SignedGraph& g, int u, int v);

struct Cycle {
  std::vector<int> vertices;  // in traversal order, least vertex first
  std::vector<int> edges;     // edge ids along the traversal
  Sign sign;

  int length() const { return static_cast<int>(edges.size()); }
  bool visits(int v) const;
};

// Every simple cycle of at most max_length edges, loops and digons included,
// one record per edge set.
std::vector<Cycle> simple_cycles(const SignedGraph& g, int max_length);

bool any_cycle_through(const std::vector<Cycle>& cycles, Sign sign, int length, int u, int v);

// Sorted edge-id sets of the negative cycles; equal sets characterise
// switching equivalence.
std::vector<std::vector<int>> negative_cycle_sets(const SignedGraph& g);

// Exhaustive existence test over every (switch set, vertex map) assignment,
// in plain vertex-id order.
bool hom_exists_brute(const SignedGraph& src, const SignedGraph& tgt);

}  // namespace sgh::oracle

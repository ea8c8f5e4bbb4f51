#pragma once

#include <array>
#include <vector>

#include "sgh/signed_graph.hpp"
#include "sgh/weighted_graph.hpp"

namespace sgh {

// Base-to-cover bookkeeping for the extended double cover. Base vertex v has
// cover pair (2v, 2v+1); plus side even, minus side odd.
struct CoverMap {
  std::vector<int> rung_edge;                  // per base vertex: its negative rung
  std::vector<std::array<int, 2>> edge_pair;   // per base edge: its two cover edges
};

inline int cover_plus(int v) { return 2 * v; }
inline int cover_minus(int v) { return 2 * v + 1; }
inline int cover_base(int cv) { return cv / 2; }
inline bool cover_minus_side(int cv) { return cv % 2 != 0; }

// One negative rung per vertex; a positive edge contributes the straight
// positive pair, a negative edge the crossing positive pair.
SignedGraph extended_double_cover(const SignedGraph& g, CoverMap* map = nullptr);

// Weighted variant: rungs weigh -1; a weight-p edge (p > 0) contributes the
// straight pair at p and the crossing pair at -(p+1), a weight--p edge the
// crossing pair at p and the straight pair at -(p+1).
WeightedSignedGraph extended_double_cover(const WeightedSignedGraph& g);

// Signed projective cube: vertices Z2^k, positive edges between ids at
// Hamming distance 1, negative edges between complements. k = 1 is the digon.
SignedGraph signed_projective_cube(int k);

// Bijection from cover ids of extended_double_cover(signed_projective_cube(k-1))
// onto signed_projective_cube(k) ids: plus side keeps the word, minus side
// complements it.
std::vector<int> projective_cube_relabel(int k);

// Walk lifted to the cover from the chosen start side. A closed negative walk
// ends on the far side and is closed up by the start vertex's rung.
Walk lift_walk(const SignedGraph& base, const Walk& w, Sign start_side);

}  // namespace sgh

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sgh/signed_graph.hpp"

namespace sgh {

// Switching homomorphism: switch the source at the set bits, then map
// vertices and edges preserving incidence and signs.
struct Homomorphism {
  std::vector<std::uint8_t> switch_bits;  // per source vertex
  std::vector<int> vertex_map;            // source vertex -> target vertex
  std::vector<int> edge_map;              // source edge -> target edge
};

// Necessary condition: all four source girths dominate the target's. A false
// result rules the homomorphism out; true promises nothing.
bool passes_girth_filter(const SignedGraph& src, const SignedGraph& tgt);

// Exhaustive backtracking over (switch bit, image) pairs. Source vertices are
// visited in BFS order from a maximum-degree root, candidates ascending with
// bit 0 first; the first witness is returned, so results are reproducible.
std::optional<Homomorphism> find_homomorphism(const SignedGraph& src, const SignedGraph& tgt);

bool verify_homomorphism(const Homomorphism& h, const SignedGraph& src, const SignedGraph& tgt);

// Seeded random partial 2-tree with a random signature, rejection-sampled
// until the walk girths dominate the girth-g reference and the class matches.
// Throws after 10^4 failed attempts; retry with another seed.
SignedGraph random_sp_signed_graph(int n, std::uint64_t seed, int girth, SignClass cls);

}  // namespace sgh

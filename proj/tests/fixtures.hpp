#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "sgh/signed_graph.hpp"

namespace sgh::fixtures {

// Cycle 0-1-...-n-1-0 with exactly one negative edge, the closing one.
inline SignedGraph neg_cycle(int n) {
  std::vector<SignedEdge> e;
  for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1, Sign::Plus});
  e.push_back({n - 1, 0, Sign::Minus});
  return SignedGraph(n, std::move(e));
}

inline SignedGraph pos_cycle(int n) {
  std::vector<SignedEdge> e;
  for (int i = 0; i < n; ++i) e.push_back({i, (i + 1) % n, Sign::Plus});
  return SignedGraph(n, std::move(e));
}

inline SignedGraph digon() {
  return SignedGraph(2, {{0, 1, Sign::Plus}, {0, 1, Sign::Minus}});
}

// Connected random simple graph: a random spanning tree plus `extra` distinct
// chords, all signs uniform.
inline SignedGraph seeded_graph(int n, std::uint64_t seed, int extra) {
  std::mt19937_64 rng(seed);
  auto sign = [&] { return rng() % 2 ? Sign::Minus : Sign::Plus; };
  std::vector<SignedEdge> edges;
  std::vector<std::pair<int, int>> used;
  for (int v = 1; v < n; ++v) {
    int u = static_cast<int>(rng() % v);
    used.push_back({u, v});
    edges.push_back({u, v, sign()});
  }
  for (int k = 0; k < extra && n >= 2; ++k) {
    for (int tries = 0; tries < 32; ++tries) {
      int u = static_cast<int>(rng() % n), v = static_cast<int>(rng() % n);
      if (u == v) continue;
      if (u > v) std::swap(u, v);
      if (std::find(used.begin(), used.end(), std::make_pair(u, v)) != used.end()) continue;
      used.push_back({u, v});
      edges.push_back({u, v, sign()});
      break;
    }
  }
  return SignedGraph(n, std::move(edges));
}

// Same graph on permuted vertex ids, edge order kept.
inline SignedGraph relabel(const SignedGraph& g, const std::vector<int>& perm) {
  std::vector<SignedEdge> edges;
  edges.reserve(g.edges().size());
  for (const SignedEdge& e : g.edges()) edges.push_back({perm[e.u], perm[e.v], e.sign});
  return SignedGraph(g.order(), std::move(edges));
}

}  // namespace sgh::fixtures

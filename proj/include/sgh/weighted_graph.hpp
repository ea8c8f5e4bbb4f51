#pragma once

#include <string>
#include <vector>

#include "sgh/girth.hpp"
#include "sgh/signed_graph.hpp"

namespace sgh {

struct WeightedEdge {
  int u, v;
  int weight;  // nonzero; |weight| is a length, the sign is the edge sign
};

// Multigraph with nonzero integer weights. A walk's length is the sum of
// |weight| and its sign the product of weight signs. Parallel edges are
// allowed only with distinct weights; exact duplicates are dropped.
class WeightedSignedGraph {
 public:
  explicit WeightedSignedGraph(int n, std::vector<WeightedEdge> edges = {}, std::string name = "");

  int order() const { return n_; }
  const std::vector<WeightedEdge>& edges() const { return edges_; }
  const WeightedEdge& edge(int e) const { return edges_.at(e); }
  std::span<const Arc> arcs(int v) const;
  bool connected() const { return connected_; }
  const std::string& name() const { return name_; }
  // Largest |weight|, 0 when edgeless.
  int weight_bound() const { return weight_bound_; }

 private:
  int n_;
  std::vector<WeightedEdge> edges_;
  std::string name_;
  std::vector<Arc> arcs_;
  std::vector<int> arc_offset_;
  bool connected_;
  int weight_bound_;
};

WeightedSignedGraph switched(const WeightedSignedGraph& g, const Switching& x);
WeightedSignedGraph to_weighted(const SignedGraph& g);

// Shortest closed walk of each type, one Dijkstra per source over V x Z2^2.
GirthVector weighted_walk_girths(const WeightedSignedGraph& g);
GirthVector weighted_walk_girths_serial(const WeightedSignedGraph& g);

// Walk-girth domination over the negative-cycle reference vector for g.
bool is_g_wide(const SignedGraph& g, int girth);
bool is_g_wide(const WeightedSignedGraph& g, int girth);

// Ordered weight triple in a girth-g context.
struct Triple {
  int p, q, r;
  int g;
};

// Closed-form wideness test for the triangle gadget of a triple. Entries may
// carry magnitude up to g; the degenerate (0, r, r) form returns true.
bool triple_is_wide(const Triple& t);

// Three negative g-cycles glued along a triangle x = 0, y = 1, z = 2; each
// |w|-path carries the sign of w and its complement the opposite sign. A
// magnitude-g entry collapses its endpoint pair to one vertex and hangs the
// whole cycle there.
SignedGraph triangle_gadget(int p, int q, int r, int g);

// All ordered triples with entries of magnitude 1..g-1 passing triple_is_wide.
std::vector<Triple> wide_triples(int g);

// The unique sign presentation with p, q, r >= 1: each negative entry x is
// replaced by g + x, which leaves the gadget unchanged.
Triple canonical_triple(const Triple& t);

}  // namespace sgh

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sgh/girth.hpp"

namespace sgh {

enum class Sign : std::int8_t { Plus = 1, Minus = -1 };

constexpr Sign operator*(Sign a, Sign b) { return a == b ? Sign::Plus : Sign::Minus; }
constexpr bool negative(Sign s) { return s == Sign::Minus; }
constexpr Sign flipped(Sign s) { return negative(s) ? Sign::Plus : Sign::Minus; }
inline char sign_char(Sign s) { return negative(s) ? '-' : '+'; }

struct SignedEdge {
  int u, v;
  Sign sign;
};

struct Arc {
  int to;
  int edge;
};

// Vertex subset whose cut-crossing edges change sign.
struct Switching {
  std::vector<int> vertices;  // sorted, no duplicates
};

// Multigraph with signed edges. Loops are allowed; parallel edges are allowed
// only with distinct signs, so duplicates with equal endpoints and sign are
// dropped on construction. Edge indices are stable in input order.
class SignedGraph {
 public:
  explicit SignedGraph(int n, std::vector<SignedEdge> edges = {}, std::string name = "");

  int order() const { return n_; }
  const std::vector<SignedEdge>& edges() const { return edges_; }
  const SignedEdge& edge(int e) const { return edges_.at(e); }
  std::span<const Arc> arcs(int v) const;
  int degree(int v) const { return static_cast<int>(arcs(v).size()); }
  bool connected() const { return connected_; }
  const std::string& name() const { return name_; }

 private:
  int n_;
  std::vector<SignedEdge> edges_;
  std::string name_;
  std::vector<Arc> arcs_;
  std::vector<int> arc_offset_;
  bool connected_;
};

SignedGraph switched(const SignedGraph& g, const Switching& x);

// Same vertex count and the same endpoint multiset, signs ignored.
bool same_underlying(const SignedGraph& a, const SignedGraph& b);
// Same underlying multigraph and equal sign sets on every endpoint pair.
bool same_signature(const SignedGraph& a, const SignedGraph& b);

// Shortest closed walk of each type, one BFS per source over V x Z2^2.
// Throws if the graph has no edge or is disconnected.
GirthVector walk_girths(const SignedGraph& g);
GirthVector walk_girths_serial(const SignedGraph& g);

// A switching carrying a onto b, when one exists. Throws if the underlying
// multigraphs differ.
std::optional<Switching> switching_witness(const SignedGraph& a, const SignedGraph& b);
inline bool switching_equivalent(const SignedGraph& a, const SignedGraph& b) {
  return switching_witness(a, b).has_value();
}

// C01: every cycle positive. C10: every cycle even. C11: every cycle positive
// iff even. Graphs that are both balanced and bipartite report C10.
enum class SignClass { C01, C10, C11, Mixed };
SignClass classify(const SignedGraph& g);
const char* to_string(SignClass c);

// Edge-index walk. Consecutive edges share the implied current vertex.
struct Walk {
  int start = 0;
  std::vector<int> edges;
};

bool walk_valid(const SignedGraph& g, const Walk& w);
int walk_end(const SignedGraph& g, const Walk& w);
Sign walk_sign(const SignedGraph& g, const Walk& w);

}  // namespace sgh

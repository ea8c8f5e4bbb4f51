#include "sgh/signed_graph.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>
#include <utility>

namespace sgh {

namespace {

std::pair<int, int> ends(int u, int v) { return {std::min(u, v), std::max(u, v)}; }

}  // namespace

SignedGraph::SignedGraph(int n, std::vector<SignedEdge> edges, std::string name)
    : n_(n), name_(std::move(name)) {
  if (n < 0) throw std::invalid_argument("signed graph: negative order");
  std::set<std::tuple<int, int, Sign>> seen;
  edges_.reserve(edges.size());
  for (const SignedEdge& e : edges) {
    if (e.u < 0 || e.u >= n_ || e.v < 0 || e.v >= n_)
      throw std::invalid_argument("signed graph: edge endpoint out of range");
    auto [a, b] = ends(e.u, e.v);
    if (seen.insert({a, b, e.sign}).second) edges_.push_back(e);
  }

  std::vector<int> deg(n_, 0);
  for (const SignedEdge& e : edges_) {
    ++deg[e.u];
    if (e.v != e.u) ++deg[e.v];
  }
  arc_offset_.assign(n_ + 1, 0);
  for (int v = 0; v < n_; ++v) arc_offset_[v + 1] = arc_offset_[v] + deg[v];
  arcs_.resize(arc_offset_[n_]);
  std::vector<int> fill(arc_offset_.begin(), arc_offset_.end() - 1);
  for (int e = 0; e < static_cast<int>(edges_.size()); ++e) {
    const SignedEdge& ed = edges_[e];
    arcs_[fill[ed.u]++] = {ed.v, e};
    if (ed.v != ed.u) arcs_[fill[ed.v]++] = {ed.u, e};
  }

  connected_ = true;
  if (n_ > 1) {
    std::vector<char> vis(n_, 0);
    std::queue<int> q;
    q.push(0);
    vis[0] = 1;
    int count = 1;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (const Arc& a : arcs(v))
        if (!vis[a.to]) {
          vis[a.to] = 1;
          ++count;
          q.push(a.to);
        }
    }
    connected_ = count == n_;
  }
}

std::span<const Arc> SignedGraph::arcs(int v) const {
  if (v < 0 || v >= n_) throw std::out_of_range("signed graph: vertex out of range");
  return {arcs_.data() + arc_offset_[v], arcs_.data() + arc_offset_[v + 1]};
}

SignedGraph switched(const SignedGraph& g, const Switching& x) {
  std::vector<char> in(g.order(), 0);
  for (int v : x.vertices) {
    if (v < 0 || v >= g.order()) throw std::out_of_range("switching: vertex out of range");
    in[v] = 1;
  }
  std::vector<SignedEdge> edges = g.edges();
  for (SignedEdge& e : edges)
    if (in[e.u] != in[e.v]) e.sign = flipped(e.sign);
  return SignedGraph(g.order(), std::move(edges), g.name());
}

namespace {

using PairKey = std::pair<int, int>;

std::map<PairKey, std::vector<Sign>> sign_classes(const SignedGraph& g) {
  std::map<PairKey, std::vector<Sign>> m;
  for (const SignedEdge& e : g.edges()) m[ends(e.u, e.v)].push_back(e.sign);
  for (auto& [k, v] : m) std::sort(v.begin(), v.end());
  return m;
}

PairKey ends(const SignedEdge& e) { return ends(e.u, e.v); }

}  // namespace

bool same_underlying(const SignedGraph& a, const SignedGraph& b) {
  if (a.order() != b.order()) return false;
  std::multiset<PairKey> ea, eb;
  for (const SignedEdge& e : a.edges()) ea.insert(ends(e));
  for (const SignedEdge& e : b.edges()) eb.insert(ends(e));
  return ea == eb;
}

bool same_signature(const SignedGraph& a, const SignedGraph& b) {
  if (a.order() != b.order()) return false;
  return sign_classes(a) == sign_classes(b);
}

namespace {

constexpr int kUnset = -1;

// BFS from (source, type 00) over vertex-type states. dist[4v + t] is the
// shortest walk from source to v accumulating type t; the walk must take at
// least one step, so the start state is seeded through the source's arcs.
void source_state_distances(const SignedGraph& g, int source, std::vector<int>& dist) {
  dist.assign(4 * g.order(), kUnset);
  std::queue<int> q;
  for (const Arc& a : g.arcs(source)) {
    const SignedEdge& e = g.edge(a.edge);
    int t = (negative(e.sign) ? 2 : 0) | 1;
    int s = 4 * a.to + t;
    if (dist[s] == kUnset) {
      dist[s] = 1;
      q.push(s);
    }
  }
  while (!q.empty()) {
    int s = q.front();
    q.pop();
    int v = s / 4, t = s % 4;
    for (const Arc& a : g.arcs(v)) {
      const SignedEdge& e = g.edge(a.edge);
      int nt = t ^ ((negative(e.sign) ? 2 : 0) | 1);
      int ns = 4 * a.to + nt;
      if (dist[ns] == kUnset) {
        dist[ns] = dist[s] + 1;
        q.push(ns);
      }
    }
  }
}

void require_girth_input(const SignedGraph& g) {
  if (g.edges().empty()) throw std::invalid_argument("walk_girths: graph has no edge");
  if (!g.connected()) throw std::invalid_argument("walk_girths: graph is disconnected");
}

GirthVector girths_from_best(const std::array<int, 3>& best) {
  GirthVector out;
  out.v[0] = Girth(2);  // one edge forth and back
  for (int t = 1; t < 4; ++t)
    out.v[t] = best[t - 1] == kUnset ? Girth::infinite() : Girth(best[t - 1]);
  return out;
}

}  // namespace

GirthVector walk_girths_serial(const SignedGraph& g) {
  require_girth_input(g);
  std::array<int, 3> best{kUnset, kUnset, kUnset};
  std::vector<int> dist;
  for (int v = 0; v < g.order(); ++v) {
    source_state_distances(g, v, dist);
    for (int t = 1; t < 4; ++t) {
      int d = dist[4 * v + t];
      if (d != kUnset && (best[t - 1] == kUnset || d < best[t - 1])) best[t - 1] = d;
    }
  }
  return girths_from_best(best);
}

GirthVector walk_girths(const SignedGraph& g) {
  require_girth_input(g);
  std::array<int, 3> best{kUnset, kUnset, kUnset};
#pragma omp parallel
  {
    std::array<int, 3> local{kUnset, kUnset, kUnset};
    std::vector<int> dist;
#pragma omp for schedule(dynamic, 8) nowait
    for (int v = 0; v < g.order(); ++v) {
      source_state_distances(g, v, dist);
      for (int t = 1; t < 4; ++t) {
        int d = dist[4 * v + t];
        if (d != kUnset && (local[t - 1] == kUnset || d < local[t - 1])) local[t - 1] = d;
      }
    }
#pragma omp critical(sgh_walk_girths)
    for (int t = 0; t < 3; ++t)
      if (local[t] != kUnset && (best[t] == kUnset || local[t] < best[t])) best[t] = local[t];
  }
  return girths_from_best(best);
}

std::optional<Switching> switching_witness(const SignedGraph& a, const SignedGraph& b) {
  if (!same_underlying(a, b))
    throw std::invalid_argument("switching_witness: underlying multigraphs differ");

  auto ca = sign_classes(a);
  auto cb = sign_classes(b);

  // Loops never switch and a parallel pair {+,-} maps to itself either way,
  // so only pairs joined by a single edge constrain the cut 2-coloring.
  struct Constraint {
    int to;
    int parity;
  };
  std::vector<std::vector<Constraint>> cons(a.order());
  for (const auto& [key, signs] : ca) {
    const std::vector<Sign>& other = cb.at(key);
    if (key.first == key.second || signs.size() == 2) {
      if (signs != other) return std::nullopt;
      continue;
    }
    int parity = signs[0] != other[0] ? 1 : 0;
    cons[key.first].push_back({key.second, parity});
    cons[key.second].push_back({key.first, parity});
  }

  std::vector<int> color(a.order(), kUnset);
  for (int root = 0; root < a.order(); ++root) {
    if (color[root] != kUnset) continue;
    color[root] = 0;
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (const Constraint& c : cons[v]) {
        int want = color[v] ^ c.parity;
        if (color[c.to] == kUnset) {
          color[c.to] = want;
          q.push(c.to);
        } else if (color[c.to] != want) {
          return std::nullopt;
        }
      }
    }
  }

  Switching x;
  for (int v = 0; v < a.order(); ++v)
    if (color[v] == 1) x.vertices.push_back(v);
  if (!same_signature(switched(a, x), b))
    throw std::logic_error("switching_witness: recovered cut fails verification");
  return x;
}

SignClass classify(const SignedGraph& g) {
  if (!g.connected()) throw std::invalid_argument("classify: graph is disconnected");
  if (g.edges().empty()) throw std::invalid_argument("classify: graph has no edge");
  GirthVector gv = walk_girths(g);
  bool no_pos_odd = gv.g01().is_infinite();
  bool no_neg_even = gv.g10().is_infinite();
  bool no_neg_odd = gv.g11().is_infinite();
  if (no_pos_odd && no_neg_odd) return SignClass::C10;   // bipartite, balanced or not
  if (no_pos_odd && no_neg_even) return SignClass::C11;  // antibalanced
  if (no_neg_even && no_neg_odd) return SignClass::C01;  // balanced
  return SignClass::Mixed;
}

const char* to_string(SignClass c) {
  switch (c) {
    case SignClass::C01: return "C01";
    case SignClass::C10: return "C10";
    case SignClass::C11: return "C11";
    case SignClass::Mixed: return "mixed";
  }
  return "?";
}

bool walk_valid(const SignedGraph& g, const Walk& w) {
  if (w.start < 0 || w.start >= g.order()) return false;
  int at = w.start;
  for (int e : w.edges) {
    if (e < 0 || e >= static_cast<int>(g.edges().size())) return false;
    const SignedEdge& ed = g.edge(e);
    if (ed.u == at)
      at = ed.v;
    else if (ed.v == at)
      at = ed.u;
    else
      return false;
  }
  return true;
}

int walk_end(const SignedGraph& g, const Walk& w) {
  if (!walk_valid(g, w)) throw std::invalid_argument("walk_end: walk does not follow adjacency");
  int at = w.start;
  for (int e : w.edges) {
    const SignedEdge& ed = g.edge(e);
    at = ed.u == at ? ed.v : ed.u;
  }
  return at;
}

Sign walk_sign(const SignedGraph& g, const Walk& w) {
  if (!walk_valid(g, w)) throw std::invalid_argument("walk_sign: walk does not follow adjacency");
  Sign s = Sign::Plus;
  for (int e : w.edges) s = s * g.edge(e).sign;
  return s;
}

}  // namespace sgh

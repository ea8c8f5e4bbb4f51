#include "sgh/weighted_graph.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <queue>
#include <set>
#include <stdexcept>
#include <utility>

namespace sgh {

WeightedSignedGraph::WeightedSignedGraph(int n, std::vector<WeightedEdge> edges, std::string name)
    : n_(n), name_(std::move(name)), weight_bound_(0) {
  if (n < 0) throw std::invalid_argument("weighted graph: negative order");
  std::set<std::tuple<int, int, int>> seen;
  edges_.reserve(edges.size());
  for (const WeightedEdge& e : edges) {
    if (e.u < 0 || e.u >= n_ || e.v < 0 || e.v >= n_)
      throw std::invalid_argument("weighted graph: edge endpoint out of range");
    if (e.weight == 0) throw std::invalid_argument("weighted graph: zero weight");
    auto key = std::tuple{std::min(e.u, e.v), std::max(e.u, e.v), e.weight};
    if (seen.insert(key).second) {
      edges_.push_back(e);
      weight_bound_ = std::max(weight_bound_, std::abs(e.weight));
    }
  }

  std::vector<int> deg(n_, 0);
  for (const WeightedEdge& e : edges_) {
    ++deg[e.u];
    if (e.v != e.u) ++deg[e.v];
  }
  arc_offset_.assign(n_ + 1, 0);
  for (int v = 0; v < n_; ++v) arc_offset_[v + 1] = arc_offset_[v] + deg[v];
  arcs_.resize(arc_offset_[n_]);
  std::vector<int> fill(arc_offset_.begin(), arc_offset_.end() - 1);
  for (int e = 0; e < static_cast<int>(edges_.size()); ++e) {
    const WeightedEdge& ed = edges_[e];
    arcs_[fill[ed.u]++] = {ed.v, e};
    if (ed.v != ed.u) arcs_[fill[ed.v]++] = {ed.u, e};
  }

  connected_ = true;
  if (n_ > 1) {
    std::vector<char> vis(n_, 0);
    std::vector<int> stack{0};
    vis[0] = 1;
    int count = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (const Arc& a : arcs(v))
        if (!vis[a.to]) {
          vis[a.to] = 1;
          ++count;
          stack.push_back(a.to);
        }
    }
    connected_ = count == n_;
  }
}

std::span<const Arc> WeightedSignedGraph::arcs(int v) const {
  if (v < 0 || v >= n_) throw std::out_of_range("weighted graph: vertex out of range");
  return {arcs_.data() + arc_offset_[v], arcs_.data() + arc_offset_[v + 1]};
}

WeightedSignedGraph switched(const WeightedSignedGraph& g, const Switching& x) {
  std::vector<char> in(g.order(), 0);
  for (int v : x.vertices) {
    if (v < 0 || v >= g.order()) throw std::out_of_range("switching: vertex out of range");
    in[v] = 1;
  }
  std::vector<WeightedEdge> edges = g.edges();
  for (WeightedEdge& e : edges)
    if (in[e.u] != in[e.v]) e.weight = -e.weight;
  return WeightedSignedGraph(g.order(), std::move(edges), g.name());
}

WeightedSignedGraph to_weighted(const SignedGraph& g) {
  std::vector<WeightedEdge> edges;
  edges.reserve(g.edges().size());
  for (const SignedEdge& e : g.edges()) edges.push_back({e.u, e.v, negative(e.sign) ? -1 : 1});
  return WeightedSignedGraph(g.order(), std::move(edges), g.name());
}

namespace {

constexpr int kUnset = -1;

// Dijkstra from (source, type 00) over vertex-type states with edge cost
// |weight|; the start state is seeded through the source's arcs so every
// recorded walk takes at least one step.
void source_state_distances(const WeightedSignedGraph& g, int source, std::vector<int>& dist) {
  dist.assign(4 * g.order(), kUnset);
  using Entry = std::pair<int, int>;  // (cost, state)
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> pq;
  auto relax = [&](int state, int cost) {
    if (dist[state] == kUnset || cost < dist[state]) {
      dist[state] = cost;
      pq.push({cost, state});
    }
  };
  for (const Arc& a : g.arcs(source)) {
    const WeightedEdge& e = g.edge(a.edge);
    int t = (e.weight < 0 ? 2 : 0) ^ (std::abs(e.weight) % 2);
    relax(4 * a.to + t, std::abs(e.weight));
  }
  while (!pq.empty()) {
    auto [cost, s] = pq.top();
    pq.pop();
    if (cost != dist[s]) continue;
    int v = s / 4, t = s % 4;
    for (const Arc& a : g.arcs(v)) {
      const WeightedEdge& e = g.edge(a.edge);
      int nt = t ^ (e.weight < 0 ? 2 : 0) ^ (std::abs(e.weight) % 2);
      relax(4 * a.to + nt, cost + std::abs(e.weight));
    }
  }
}

void require_girth_input(const WeightedSignedGraph& g) {
  if (g.edges().empty()) throw std::invalid_argument("weighted_walk_girths: graph has no edge");
  if (!g.connected()) throw std::invalid_argument("weighted_walk_girths: graph is disconnected");
}

GirthVector girths_from_best(const std::array<int, 4>& best) {
  GirthVector out;
  for (int t = 0; t < 4; ++t)
    out.v[t] = best[t] == kUnset ? Girth::infinite() : Girth(best[t]);
  return out;
}

void fold_source(const WeightedSignedGraph& g, int v, std::vector<int>& dist,
                 std::array<int, 4>& best) {
  source_state_distances(g, v, dist);
  for (int t = 0; t < 4; ++t) {
    int d = dist[4 * v + t];
    if (d != kUnset && (best[t] == kUnset || d < best[t])) best[t] = d;
  }
}

}  // namespace

GirthVector weighted_walk_girths_serial(const WeightedSignedGraph& g) {
  require_girth_input(g);
  std::array<int, 4> best{kUnset, kUnset, kUnset, kUnset};
  std::vector<int> dist;
  for (int v = 0; v < g.order(); ++v) fold_source(g, v, dist, best);
  return girths_from_best(best);
}

GirthVector weighted_walk_girths(const WeightedSignedGraph& g) {
  require_girth_input(g);
  std::array<int, 4> best{kUnset, kUnset, kUnset, kUnset};
#pragma omp parallel
  {
    std::array<int, 4> local{kUnset, kUnset, kUnset, kUnset};
    std::vector<int> dist;
#pragma omp for schedule(dynamic, 8) nowait
    for (int v = 0; v < g.order(); ++v) fold_source(g, v, dist, local);
#pragma omp critical(sgh_weighted_girths)
    for (int t = 0; t < 4; ++t)
      if (local[t] != kUnset && (best[t] == kUnset || local[t] < best[t])) best[t] = local[t];
  }
  return girths_from_best(best);
}

bool is_g_wide(const SignedGraph& g, int girth) {
  return walk_girths(g).dominates(negative_cycle_reference(girth));
}

bool is_g_wide(const WeightedSignedGraph& g, int girth) {
  return weighted_walk_girths(g).dominates(negative_cycle_reference(girth));
}

namespace {

void require_triple_entries(const Triple& t) {
  if (t.g < 1) throw std::invalid_argument("triple: girth context must be positive");
  for (int x : {t.p, t.q, t.r})
    if (std::abs(x) > t.g) throw std::invalid_argument("triple: entry magnitude exceeds g");
}

}  // namespace

bool triple_is_wide(const Triple& t) {
  require_triple_entries(t);
  if (t.p == 0) {
    // Identified endpoints leave a doubled path; it must agree in both halves.
    if (t.q != t.r || t.q == 0 || std::abs(t.q) > t.g - 1)
      throw std::invalid_argument("triple: degenerate form requires p = 0, q = r nonzero");
    return true;
  }
  if (t.q == 0 || t.r == 0) throw std::invalid_argument("triple: zero entry outside degenerate form");
  long long ap = std::abs(t.p), aq = std::abs(t.q), ar = std::abs(t.r);
  long long sum = ap + aq + ar;
  long long mx = std::max({ap, aq, ar});
  long long mn = std::min({ap, aq, ar});
  bool neg = (t.p < 0) ^ (t.q < 0) ^ (t.r < 0);
  if (!neg) return sum % 2 == 0 && 2 * mx <= sum && sum <= 2 * t.g;
  return sum % 2 == t.g % 2 && t.g <= sum && sum <= t.g + 2 * mn;
}

SignedGraph triangle_gadget(int p, int q, int r, int g) {
  if (g < 1) throw std::invalid_argument("triangle_gadget: girth must be positive");
  for (int w : {p, q, r})
    if (w == 0 || std::abs(w) > g)
      throw std::invalid_argument("triangle_gadget: entries must have magnitude 1..g");

  int next = 0;
  int x = next++;
  int y = std::abs(p) == g ? x : next++;
  int z;
  if (std::abs(q) == g && std::abs(r) == g) {
    if (x != y) throw std::invalid_argument("triangle_gadget: inconsistent degenerate entries");
    z = x;
  } else if (std::abs(q) == g) {
    z = y;
  } else if (std::abs(r) == g) {
    z = x;
  } else {
    z = next++;
  }

  std::vector<SignedEdge> edges;
  // Chain of `len` edges from a to b; the first edge carries the sign.
  auto add_path = [&](int a, int b, int len, Sign s) {
    int at = a;
    for (int i = 1; i < len; ++i) {
      int mid = next++;
      edges.push_back({at, mid, i == 1 ? s : Sign::Plus});
      at = mid;
    }
    edges.push_back({at, b, len == 1 ? s : Sign::Plus});
  };
  auto add_cycle = [&](int a, int b, int w) {
    if (a == b) {
      add_path(a, a, g, Sign::Minus);
      return;
    }
    Sign s = w < 0 ? Sign::Minus : Sign::Plus;
    add_path(a, b, std::abs(w), s);
    add_path(a, b, g - std::abs(w), flipped(s));
  };
  add_cycle(x, y, p);
  add_cycle(y, z, q);
  add_cycle(z, x, r);
  return SignedGraph(next, std::move(edges));
}

std::vector<Triple> wide_triples(int g) {
  if (g < 2) throw std::invalid_argument("wide_triples: girth must be at least 2");
  std::vector<Triple> out;
  for (int p = -(g - 1); p <= g - 1; ++p) {
    if (p == 0) continue;
    for (int q = -(g - 1); q <= g - 1; ++q) {
      if (q == 0) continue;
      for (int r = -(g - 1); r <= g - 1; ++r) {
        if (r == 0) continue;
        Triple t{p, q, r, g};
        if (triple_is_wide(t)) out.push_back(t);
      }
    }
  }
  return out;
}

Triple canonical_triple(const Triple& t) {
  auto norm = [&](int x) {
    if (x == 0 || std::abs(x) > t.g - 1)
      throw std::invalid_argument("canonical_triple: entry magnitude must be 1..g-1");
    return x > 0 ? x : t.g + x;
  };
  return Triple{norm(t.p), norm(t.q), norm(t.r), t.g};
}

}  // namespace sgh

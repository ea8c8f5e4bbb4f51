#include "sgh/hom.hpp"

#include <algorithm>
#include <queue>
#include <random>
#include <stdexcept>

#include "sgh/weighted_graph.hpp"

namespace sgh {

bool passes_girth_filter(const SignedGraph& src, const SignedGraph& tgt) {
  auto measurable = [](const SignedGraph& g) { return g.connected() && !g.edges().empty(); };
  if (!measurable(src) || !measurable(tgt)) return true;
  GirthVector s = walk_girths(src), t = walk_girths(tgt);
  return s.dominates(t);
}

namespace {

// Target adjacency by required sign; slot [neg][u * m + v].
struct TargetIndex {
  int m;
  std::vector<int> slot[2];

  explicit TargetIndex(const SignedGraph& tgt) : m(tgt.order()) {
    slot[0].assign(static_cast<size_t>(m) * m, -1);
    slot[1].assign(static_cast<size_t>(m) * m, -1);
    for (int e = 0; e < static_cast<int>(tgt.edges().size()); ++e) {
      const SignedEdge& ed = tgt.edge(e);
      int neg = negative(ed.sign) ? 1 : 0;
      slot[neg][ed.u * m + ed.v] = e;
      slot[neg][ed.v * m + ed.u] = e;
    }
  }

  int find(Sign s, int u, int v) const {
    return slot[negative(s) ? 1 : 0][static_cast<size_t>(u) * m + v];
  }
};

std::vector<int> search_order(const SignedGraph& g) {
  int n = g.order();
  std::vector<int> order;
  std::vector<char> seen(n, 0);
  auto best_root = [&]() {
    int root = -1;
    for (int v = 0; v < n; ++v)
      if (!seen[v] && (root < 0 || g.degree(v) > g.degree(root))) root = v;
    return root;
  };
  while (static_cast<int>(order.size()) < n) {
    int root = best_root();
    seen[root] = 1;
    std::queue<int> q;
    q.push(root);
    order.push_back(root);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (const Arc& a : g.arcs(v))
        if (!seen[a.to]) {
          seen[a.to] = 1;
          order.push_back(a.to);
          q.push(a.to);
        }
    }
  }
  return order;
}

struct HomSearch {
  const SignedGraph& src;
  const TargetIndex& idx;
  std::vector<int> order;
  std::vector<int> img;
  std::vector<std::uint8_t> bit;
  std::vector<char> assigned;

  HomSearch(const SignedGraph& s, const TargetIndex& i)
      : src(s), idx(i), order(search_order(s)), img(s.order(), -1), bit(s.order(), 0),
        assigned(s.order(), 0) {}

  bool feasible(int v) const {
    Sign sv = bit[v] ? Sign::Minus : Sign::Plus;
    for (const Arc& a : src.arcs(v)) {
      if (a.to == v) {
        // Loops keep their sign; a switch flips both ends.
        if (idx.find(src.edge(a.edge).sign, img[v], img[v]) < 0) return false;
        continue;
      }
      if (!assigned[a.to]) continue;
      Sign st = bit[a.to] ? Sign::Minus : Sign::Plus;
      Sign want = src.edge(a.edge).sign * sv * st;
      if (idx.find(want, img[v], img[a.to]) < 0) return false;
    }
    return true;
  }

  bool run(int pos) {
    if (pos == static_cast<int>(order.size())) return true;
    int v = order[pos];
    for (int b = 0; b < 2; ++b)
      for (int t = 0; t < idx.m; ++t) {
        bit[v] = static_cast<std::uint8_t>(b);
        img[v] = t;
        assigned[v] = 1;
        if (feasible(v) && run(pos + 1)) return true;
        assigned[v] = 0;
      }
    img[v] = -1;
    return false;
  }
};

}  // namespace

std::optional<Homomorphism> find_homomorphism(const SignedGraph& src, const SignedGraph& tgt) {
  if (src.order() == 0) return Homomorphism{{}, {}, {}};
  if (tgt.order() == 0) return std::nullopt;
  TargetIndex idx(tgt);
  HomSearch s(src, idx);
  if (!s.run(0)) return std::nullopt;

  Homomorphism h;
  h.switch_bits = s.bit;
  h.vertex_map = s.img;
  h.edge_map.reserve(src.edges().size());
  for (const SignedEdge& e : src.edges()) {
    Sign su = h.switch_bits[e.u] ? Sign::Minus : Sign::Plus;
    Sign sv = h.switch_bits[e.v] ? Sign::Minus : Sign::Plus;
    Sign want = e.u == e.v ? e.sign : e.sign * su * sv;
    int te = idx.find(want, h.vertex_map[e.u], h.vertex_map[e.v]);
    if (te < 0) throw std::logic_error("find_homomorphism: witness lost an edge");
    h.edge_map.push_back(te);
  }
  return h;
}

bool verify_homomorphism(const Homomorphism& h, const SignedGraph& src, const SignedGraph& tgt) {
  int n = src.order();
  if (static_cast<int>(h.switch_bits.size()) != n) return false;
  if (static_cast<int>(h.vertex_map.size()) != n) return false;
  if (h.edge_map.size() != src.edges().size()) return false;
  for (int v = 0; v < n; ++v) {
    if (h.switch_bits[v] > 1) return false;
    if (h.vertex_map[v] < 0 || h.vertex_map[v] >= tgt.order()) return false;
  }
  for (size_t e = 0; e < src.edges().size(); ++e) {
    const SignedEdge& se = src.edges()[e];
    int te = h.edge_map[e];
    if (te < 0 || te >= static_cast<int>(tgt.edges().size())) return false;
    const SignedEdge& td = tgt.edge(te);
    int iu = h.vertex_map[se.u], iv = h.vertex_map[se.v];
    if (!((td.u == iu && td.v == iv) || (td.u == iv && td.v == iu))) return false;
    Sign su = h.switch_bits[se.u] ? Sign::Minus : Sign::Plus;
    Sign sv = h.switch_bits[se.v] ? Sign::Minus : Sign::Plus;
    Sign want = se.u == se.v ? se.sign : se.sign * su * sv;
    if (td.sign != want) return false;
  }
  return true;
}

SignedGraph random_sp_signed_graph(int n, std::uint64_t seed, int girth, SignClass cls) {
  if (n < 2) throw std::invalid_argument("random_sp_signed_graph: need at least 2 vertices");
  if (girth < 1) throw std::invalid_argument("random_sp_signed_graph: girth must be positive");
  std::mt19937_64 rng(seed);
  constexpr int kBudget = 10000;
  for (int attempt = 0; attempt < kBudget; ++attempt) {
    // Random 2-tree, then deletions that keep it connected; subgraphs of
    // 2-trees have no K4 minor. Two vertices leave just the single edge.
    std::vector<std::pair<int, int>> und;
    if (n == 2) {
      und = {{0, 1}};
    } else {
      und = {{0, 1}, {1, 2}, {0, 2}};
      for (int v = 3; v < n; ++v) {
        auto [x, y] = und[rng() % und.size()];
        und.push_back({x, v});
        und.push_back({y, v});
      }
    }
    int rounds = static_cast<int>(rng() % (und.size() / 3 + 1));
    for (int k = 0; k < rounds; ++k) {
      size_t idx = rng() % und.size();
      std::vector<std::pair<int, int>> trial = und;
      trial.erase(trial.begin() + static_cast<long>(idx));
      std::vector<std::vector<int>> adj(n);
      for (auto [x, y] : trial) {
        adj[x].push_back(y);
        adj[y].push_back(x);
      }
      std::vector<char> seen(n, 0);
      std::vector<int> stack{0};
      seen[0] = 1;
      int count = 1;
      while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj[v])
          if (!seen[w]) {
            seen[w] = 1;
            ++count;
            stack.push_back(w);
          }
      }
      if (count == n) und = std::move(trial);
    }
    std::vector<SignedEdge> edges;
    edges.reserve(und.size());
    for (auto [x, y] : und)
      edges.push_back({x, y, rng() % 2 ? Sign::Minus : Sign::Plus});
    SignedGraph cand(n, std::move(edges));
    if (!cand.connected()) continue;
    if (!is_g_wide(cand, girth)) continue;
    if (classify(cand) != cls) continue;
    return cand;
  }
  throw std::runtime_error("random_sp_signed_graph: rejection budget exhausted");
}

}  // namespace sgh

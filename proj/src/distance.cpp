#include "sgh/distance.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <stdexcept>

#include "sgh/edc.hpp"

namespace sgh {

namespace {

constexpr int kUnset = -1;

void require_vertex(const SignedGraph& g, int v, const char* who) {
  if (v < 0 || v >= g.order()) throw std::out_of_range(std::string(who) + ": vertex out of range");
}

// BFS over (vertex, walk-sign) states from u, edge cost 1.
std::vector<int> sign_state_distances(const SignedGraph& g, int u) {
  std::vector<int> dist(2 * g.order(), kUnset);
  dist[2 * u] = 0;
  std::queue<int> q;
  q.push(2 * u);
  while (!q.empty()) {
    int s = q.front();
    q.pop();
    int v = s / 2, neg = s % 2;
    for (const Arc& a : g.arcs(v)) {
      int nn = neg ^ (negative(g.edge(a.edge).sign) ? 1 : 0);
      int ns = 2 * a.to + nn;
      if (dist[ns] == kUnset) {
        dist[ns] = dist[s] + 1;
        q.push(ns);
      }
    }
  }
  return dist;
}

std::vector<int> bfs_distances(const SignedGraph& g, int u) {
  std::vector<int> dist(g.order(), kUnset);
  dist[u] = 0;
  std::queue<int> q;
  q.push(u);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (const Arc& a : g.arcs(v))
      if (dist[a.to] == kUnset) {
        dist[a.to] = dist[v] + 1;
        q.push(a.to);
      }
  }
  return dist;
}

}  // namespace

std::vector<int> algebraic_distances_from(const SignedGraph& g, int u) {
  require_vertex(g, u, "algebraic_distance");
  if (!g.connected()) throw std::invalid_argument("algebraic_distance: graph is disconnected");
  std::vector<int> state = sign_state_distances(g, u);
  std::vector<int> out(g.order(), 0);
  for (int v = 0; v < g.order(); ++v) {
    if (v == u) continue;
    int pos = state[2 * v], neg = state[2 * v + 1];
    int d = pos == kUnset ? neg : (neg == kUnset ? pos : std::min(pos, neg));
    out[v] = pos == d ? d : -d;
  }
  return out;
}

int algebraic_distance(const SignedGraph& g, int u, int v) {
  require_vertex(g, v, "algebraic_distance");
  if (u == v) throw std::invalid_argument("algebraic_distance: undefined on equal vertices");
  return algebraic_distances_from(g, u)[v];
}

int girth_transform(int x, int g) {
  if (g < 1) throw std::invalid_argument("girth_transform: girth must be positive");
  if (x == 0 || x > g / 2 || x <= -((g + 1) / 2))
    throw std::invalid_argument("girth_transform: argument outside domain");
  return x > 0 ? x : g + x;
}

namespace {

// Depth-first search for a simple negative cycle of exact length through u
// and v. Underlying BFS distances prune branches that cannot close up or
// still reach v in the remaining budget.
struct CycleSearch {
  const SignedGraph& g;
  int u, v, length;
  std::vector<int> du, dv;
  std::vector<char> vis;
  std::vector<char> edge_used;
  std::vector<int> path;
  std::optional<Walk> result;

  CycleSearch(const SignedGraph& gr, int uu, int vv, int len)
      : g(gr), u(uu), v(vv), length(len), vis(gr.order(), 0),
        edge_used(gr.edges().size(), 0) {
    du = bfs_distances(g, u);
    dv = bfs_distances(g, v);
  }

  bool run() {
    vis[u] = 1;
    dfs(u, 0, false, v == u);
    return result.has_value();
  }

  void dfs(int at, int len, bool neg, bool seen_v) {
    for (const Arc& a : g.arcs(at)) {
      if (result) return;
      if (edge_used[a.edge]) continue;
      bool eneg = negative(g.edge(a.edge).sign);
      if (a.to == u) {
        if (len + 1 == length && seen_v && (neg ^ eneg)) {
          Walk w;
          w.start = u;
          w.edges = path;
          w.edges.push_back(a.edge);
          result = std::move(w);
          return;
        }
        continue;
      }
      if (vis[a.to] || len + 1 >= length) continue;
      int nl = len + 1;
      if (du[a.to] == kUnset || nl + du[a.to] > length) continue;
      bool ns = seen_v || a.to == v;
      if (!ns && (dv[a.to] == kUnset || nl + dv[a.to] + du[v] > length)) continue;
      vis[a.to] = 1;
      edge_used[a.edge] = 1;
      path.push_back(a.edge);
      dfs(a.to, nl, neg ^ eneg, ns);
      path.pop_back();
      edge_used[a.edge] = 0;
      vis[a.to] = 0;
    }
  }
};

std::vector<int> walk_vertices(const SignedGraph& g, const Walk& w) {
  std::vector<int> out{w.start};
  int at = w.start;
  for (int e : w.edges) {
    const SignedEdge& ed = g.edge(e);
    at = ed.u == at ? ed.v : ed.u;
    out.push_back(at);
  }
  return out;
}

// Closed walk of the expected length whose vertices are pairwise distinct and
// whose sign is negative; the cycle test behind every witness we accept.
bool is_simple_negative_cycle(const SignedGraph& g, const Walk& w, int expected_len) {
  if (static_cast<int>(w.edges.size()) != expected_len) return false;
  if (!walk_valid(g, w) || walk_end(g, w) != w.start) return false;
  if (!negative(walk_sign(g, w))) return false;
  std::vector<int> vs = walk_vertices(g, w);
  vs.pop_back();  // closing vertex repeats the start
  std::set<int> uniq(vs.begin(), vs.end());
  if (uniq.size() != vs.size()) return false;
  std::set<int> edges(w.edges.begin(), w.edges.end());
  return edges.size() == w.edges.size();
}

}  // namespace

std::optional<Walk> negative_cycle_walk(const SignedGraph& g, int u, int v, int length) {
  require_vertex(g, u, "negative_cycle_walk");
  require_vertex(g, v, "negative_cycle_walk");
  if (length < 1) throw std::invalid_argument("negative_cycle_walk: length must be positive");
  if (length > std::max(g.order(), 1)) return std::nullopt;
  CycleSearch s(g, u, v, length);
  if (s.dv[u] == kUnset) return std::nullopt;
  if (v != u && 2 * s.du[v] > length) return std::nullopt;
  if (!s.run()) return std::nullopt;
  if (!is_simple_negative_cycle(g, *s.result, length))
    throw std::logic_error("negative_cycle_walk: search returned a non-cycle");
  return s.result;
}

std::optional<std::vector<int>> negative_cycle_through(const SignedGraph& g, int u, int v,
                                                       int length) {
  auto w = negative_cycle_walk(g, u, v, length);
  if (!w) return std::nullopt;
  std::vector<int> vs = walk_vertices(g, *w);
  vs.pop_back();
  return vs;
}

WeightedSignedGraph girth_transformed_distance_graph(const SignedGraph& base,
                                                     const std::vector<VertexPair>& pairs, int g,
                                                     bool check_cycles) {
  if (!is_g_wide(base, g))
    throw std::invalid_argument("girth_transformed_distance_graph: base is not wide enough");
  std::vector<WeightedEdge> edges;
  edges.reserve(pairs.size());
  std::vector<std::vector<int>> ad_rows(base.order());
  for (const VertexPair& p : pairs) {
    require_vertex(base, p.u, "girth_transformed_distance_graph");
    require_vertex(base, p.v, "girth_transformed_distance_graph");
    if (p.u == p.v)
      throw std::invalid_argument("girth_transformed_distance_graph: pair of equal vertices");
    if (check_cycles && !on_common_negative_cycle(base, p.u, p.v, g))
      throw std::invalid_argument(
          "girth_transformed_distance_graph: pair is on no common negative cycle");
    if (ad_rows[p.u].empty()) ad_rows[p.u] = algebraic_distances_from(base, p.u);
    edges.push_back({p.u, p.v, girth_transform(ad_rows[p.u][p.v], g)});
  }
  return WeightedSignedGraph(base.order(), std::move(edges));
}

namespace {

// Ordered positive wide triples (p, q, r) with entries 1..g-1, grouped by p.
std::vector<std::vector<std::pair<int, int>>> positive_triples_by_first(int g) {
  std::vector<std::vector<std::pair<int, int>>> by_first(g);
  for (int p = 1; p <= g - 1; ++p)
    for (int q = 1; q <= g - 1; ++q)
      for (int r = 1; r <= g - 1; ++r) {
        int sum = p + q + r;
        int mx = std::max({p, q, r});
        if (sum % 2 == 0 && 2 * mx <= sum && sum <= 2 * g) by_first[p].push_back({q, r});
      }
  return by_first;
}

struct ClosureContext {
  const TriangleSet* ts;
  int g;
  int n;
  std::vector<int> eid;                                    // n*n -> host edge id
  std::vector<int> checked_edges;                          // edge ids in the triangle union
  std::vector<std::vector<int>> third;                     // per host edge: completing vertices
  std::vector<std::vector<std::pair<int, int>>> triples;   // by first entry
};

ClosureContext build_closure_context(const TriangleSet& ts, int g) {
  if (g < 1) throw std::invalid_argument("closure: girth must be positive");
  ClosureContext ctx;
  ctx.ts = &ts;
  ctx.g = g;
  ctx.n = ts.host.order();
  ctx.eid.assign(static_cast<size_t>(ctx.n) * ctx.n, kUnset);
  for (int e = 0; e < static_cast<int>(ts.host.edges().size()); ++e) {
    const WeightedEdge& ed = ts.host.edge(e);
    if (ed.u == ed.v) throw std::invalid_argument("closure: host has a loop");
    if (ed.weight < 1 || ed.weight > g - 1)
      throw std::invalid_argument("closure: host weight outside 1..g-1");
    if (ctx.eid[ed.u * ctx.n + ed.v] != kUnset)
      throw std::invalid_argument("closure: host has parallel edges");
    ctx.eid[ed.u * ctx.n + ed.v] = e;
    ctx.eid[ed.v * ctx.n + ed.u] = e;
  }
  ctx.third.assign(ts.host.edges().size(), {});
  std::set<int> used;
  for (const Triangle& t : ts.triangles) {
    auto [x, y, z] = t;
    if (!(0 <= x && x < y && y < z && z < ctx.n))
      throw std::invalid_argument("closure: triangle vertices must be ascending and in range");
    int exy = ctx.eid[x * ctx.n + y];
    int eyz = ctx.eid[y * ctx.n + z];
    int ezx = ctx.eid[z * ctx.n + x];
    if (exy == kUnset || eyz == kUnset || ezx == kUnset)
      throw std::invalid_argument("closure: triangle side is not a host edge");
    ctx.third[exy].push_back(z);
    ctx.third[eyz].push_back(x);
    ctx.third[ezx].push_back(y);
    used.insert({exy, eyz, ezx});
  }
  ctx.checked_edges.assign(used.begin(), used.end());
  std::sort(ctx.checked_edges.begin(), ctx.checked_edges.end(), [&](int a, int b) {
    const WeightedEdge& ea = ts.host.edge(a);
    const WeightedEdge& eb = ts.host.edge(b);
    return std::pair(std::min(ea.u, ea.v), std::max(ea.u, ea.v)) <
           std::pair(std::min(eb.u, eb.v), std::max(eb.u, eb.v));
  });
  ctx.triples = positive_triples_by_first(g);
  return ctx;
}

void check_one_edge(const ClosureContext& ctx, int e, std::vector<ClosureViolation>& out) {
  const WeightedEdge& ed = ctx.ts->host.edge(e);
  int x = std::min(ed.u, ed.v), y = std::max(ed.u, ed.v);
  int g = ctx.g;
  std::vector<char> present(static_cast<size_t>(g + 1) * (g + 1), 0);
  for (int z : ctx.third[e]) {
    int wx = ctx.ts->host.edge(ctx.eid[z * ctx.n + x]).weight;
    int wy = ctx.ts->host.edge(ctx.eid[z * ctx.n + y]).weight;
    present[wx * (g + 1) + wy] = 1;
  }
  for (auto [q, r] : ctx.triples[ed.weight])
    if (!present[q * (g + 1) + r] && !present[(g - q) * (g + 1) + (g - r)])
      out.push_back({x, y, ed.weight, q, r});
}

}  // namespace

std::vector<ClosureViolation> closure_violations_serial(const TriangleSet& t, int g) {
  ClosureContext ctx = build_closure_context(t, g);
  std::vector<ClosureViolation> out;
  for (int e : ctx.checked_edges) check_one_edge(ctx, e, out);
  return out;
}

std::vector<ClosureViolation> closure_violations(const TriangleSet& t, int g) {
  ClosureContext ctx = build_closure_context(t, g);
  int m = static_cast<int>(ctx.checked_edges.size());
  std::vector<std::vector<ClosureViolation>> per_edge(m);
#pragma omp parallel for schedule(dynamic, 16)
  for (int i = 0; i < m; ++i) check_one_edge(ctx, ctx.checked_edges[i], per_edge[i]);
  std::vector<ClosureViolation> out;
  for (const auto& part : per_edge) out.insert(out.end(), part.begin(), part.end());
  return out;
}

namespace {

bool degenerate_base(const SignedGraph& base, int g) {
  return base.order() <= 2 && walk_girths(base) == negative_cycle_reference(g);
}

}  // namespace

std::vector<std::string> certificate_problems(const Certificate& c) {
  std::vector<std::string> out;
  if (c.girth < 1) {
    out.push_back("girth must be positive");
    return out;
  }
  if (!c.base.connected()) out.push_back("base is disconnected");
  if (c.base.edges().empty()) {
    out.push_back("base has no edge");
    return out;
  }
  if (!is_g_wide(c.base, c.girth)) out.push_back("base girths fall below the reference vector");
  if (c.dist_graph.order() != c.base.order())
    out.push_back("distance graph order differs from the base");

  std::vector<std::vector<int>> ad_rows(c.base.order());
  for (const WeightedEdge& e : c.dist_graph.edges()) {
    std::string tag = "edge " + std::to_string(e.u) + "-" + std::to_string(e.v);
    if (e.u == e.v) {
      out.push_back(tag + " is a loop");
      continue;
    }
    if (e.weight < 1 || e.weight > c.girth - 1) {
      out.push_back(tag + " weight outside 1..g-1");
      continue;
    }
    if (ad_rows[e.u].empty()) ad_rows[e.u] = algebraic_distances_from(c.base, e.u);
    int want = girth_transform(ad_rows[e.u][e.v], c.girth);
    if (e.weight != want)
      out.push_back(tag + " weight " + std::to_string(e.weight) +
                    " does not match the transformed distance " + std::to_string(want));
    if (!on_common_negative_cycle(c.base, e.u, e.v, c.girth))
      out.push_back(tag + " endpoints share no negative cycle of the stated girth");
  }

  for (const Triangle& t : c.triangles)
    if (!(t[0] < t[1] && t[1] < t[2]))
      out.push_back("triangle vertices must be strictly ascending");
  if (!std::is_sorted(c.triangles.begin(), c.triangles.end()))
    out.push_back("triangle list is not sorted");

  if (out.empty()) {
    TriangleSet ts{c.dist_graph, c.triangles};
    try {
      auto viols = closure_violations(ts, c.girth);
      if (!viols.empty())
        out.push_back("triangle family has " + std::to_string(viols.size()) +
                      " closure violations");
    } catch (const std::invalid_argument& e) {
      out.push_back(std::string("triangle family malformed: ") + e.what());
    }
  }

  if (c.triangles.empty() && !degenerate_base(c.base, c.girth))
    out.push_back("empty triangle family on a base with more than two vertices");
  return out;
}

void validate_certificate(const Certificate& c) {
  std::vector<std::string> problems = certificate_problems(c);
  if (problems.empty()) return;
  std::string msg = "certificate invalid:";
  for (const std::string& p : problems) msg += "\n  " + p;
  throw std::invalid_argument(msg);
}

std::optional<Certificate> certify_sp_complete(const SignedGraph& base, int g) {
  if (g < 1) throw std::invalid_argument("certify_sp_complete: girth must be positive");
  if (!is_g_wide(base, g))
    throw std::invalid_argument("certify_sp_complete: base is not wide enough");

  int n = base.order();
  std::vector<VertexPair> all_pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) all_pairs.push_back({u, v});
  std::vector<char> on_cycle(all_pairs.size(), 0);
#pragma omp parallel for schedule(dynamic, 4)
  for (int i = 0; i < static_cast<int>(all_pairs.size()); ++i)
    on_cycle[i] = on_common_negative_cycle(base, all_pairs[i].u, all_pairs[i].v, g) ? 1 : 0;

  std::vector<VertexPair> pairs;
  for (size_t i = 0; i < all_pairs.size(); ++i)
    if (on_cycle[i]) pairs.push_back(all_pairs[i]);

  WeightedSignedGraph dist = girth_transformed_distance_graph(base, pairs, g, false);

  std::vector<int> eid(static_cast<size_t>(n) * n, kUnset);
  for (int e = 0; e < static_cast<int>(dist.edges().size()); ++e) {
    const WeightedEdge& ed = dist.edge(e);
    eid[ed.u * n + ed.v] = e;
    eid[ed.v * n + ed.u] = e;
  }
  std::vector<Triangle> triangles;
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) {
      if (eid[x * n + y] == kUnset) continue;
      for (int z = y + 1; z < n; ++z)
        if (eid[y * n + z] != kUnset && eid[z * n + x] != kUnset)
          triangles.push_back({x, y, z});
    }

  // Greatest-fixpoint pruning: a violated edge can sit in no closed family,
  // so its triangles go, possibly exposing new violations.
  std::vector<char> edge_dead(dist.edges().size(), 0);
  while (true) {
    std::vector<Triangle> active;
    for (const Triangle& t : triangles) {
      auto [x, y, z] = t;
      if (!edge_dead[eid[x * n + y]] && !edge_dead[eid[y * n + z]] && !edge_dead[eid[z * n + x]])
        active.push_back(t);
    }
    TriangleSet ts{dist, active};
    std::vector<ClosureViolation> viols = closure_violations(ts, g);
    if (viols.empty()) {
      if (active.empty()) {
        if (degenerate_base(base, g)) return Certificate{base, g, dist, {}};
        return std::nullopt;
      }
      std::set<int> used;
      for (const Triangle& t : active) {
        used.insert(eid[t[0] * n + t[1]]);
        used.insert(eid[t[1] * n + t[2]]);
        used.insert(eid[t[2] * n + t[0]]);
      }
      std::vector<WeightedEdge> kept;
      for (int e : used) kept.push_back(dist.edge(e));
      return Certificate{base, g, WeightedSignedGraph(n, std::move(kept)), active};
    }
    for (const ClosureViolation& v : viols) edge_dead[eid[v.u * n + v.v]] = 1;
  }
}

namespace {

Walk reversed_walk(const SignedGraph& g, const Walk& w) {
  Walk out;
  out.start = walk_end(g, w);
  out.edges.assign(w.edges.rbegin(), w.edges.rend());
  return out;
}

// Negative cycle one longer than the base's, through two chosen cover
// vertices, obtained by lifting a base witness cycle from the right side and
// direction. Returns false only if no lift hits the pair, which cannot
// happen for witnesses through the pair's base vertices.
bool cover_pair_on_lifted_cycle(const SignedGraph& base, const SignedGraph& cover,
                                const Walk& base_cycle, int a, int b, int target_len) {
  for (Sign side : {Sign::Plus, Sign::Minus}) {
    for (bool rev : {false, true}) {
      Walk w = rev ? reversed_walk(base, base_cycle) : base_cycle;
      if (w.start != cover_base(a)) continue;
      if (negative(side) != cover_minus_side(a)) continue;
      Walk lifted = lift_walk(base, w, side);
      if (!is_simple_negative_cycle(cover, lifted, target_len)) continue;
      std::vector<int> vs = walk_vertices(cover, lifted);
      if (std::find(vs.begin(), vs.end(), b) != vs.end()) return true;
    }
  }
  return false;
}

}  // namespace

Certificate lift_certificate(const Certificate& c) {
  validate_certificate(c);
  int g = c.girth;
  CoverMap map;
  SignedGraph cover = extended_double_cover(c.base, &map);

  std::vector<WeightedEdge> lifted;
  for (int v = 0; v < c.base.order(); ++v)
    lifted.push_back({cover_plus(v), cover_minus(v), g});
  for (const WeightedEdge& e : c.dist_graph.edges()) {
    lifted.push_back({cover_plus(e.u), cover_plus(e.v), e.weight});
    lifted.push_back({cover_minus(e.u), cover_minus(e.v), e.weight});
    lifted.push_back({cover_plus(e.u), cover_minus(e.v), g - e.weight});
    lifted.push_back({cover_minus(e.u), cover_plus(e.v), g - e.weight});
  }
  WeightedSignedGraph dist(cover.order(), lifted);

  // The lifted graph must be a girth-transformed distance graph of the cover
  // at girth g+1: weights match transformed algebraic distances and every
  // edge pair rides a negative (g+1)-cycle lifted from a base witness.
  std::vector<std::vector<int>> ad_rows(cover.order());
  auto ad = [&](int a, int b) {
    if (ad_rows[a].empty()) ad_rows[a] = algebraic_distances_from(cover, a);
    return ad_rows[a][b];
  };
  for (const WeightedEdge& e : dist.edges()) {
    if (girth_transform(ad(e.u, e.v), g + 1) != e.weight)
      throw std::logic_error("lift_certificate: lifted weight disagrees with cover distance");
    int bu = cover_base(e.u), bv = cover_base(e.v);
    std::optional<Walk> witness = negative_cycle_walk(c.base, bu, bv, g);
    if (!witness)
      throw std::logic_error("lift_certificate: no base cycle under a lifted edge");
    if (!cover_pair_on_lifted_cycle(c.base, cover, *witness, e.u, e.v, g + 1))
      throw std::logic_error("lift_certificate: lifted cycle misses the edge pair");
  }

  int n = dist.order();
  std::vector<int> eid(static_cast<size_t>(n) * n, kUnset);
  for (int e = 0; e < static_cast<int>(dist.edges().size()); ++e) {
    const WeightedEdge& ed = dist.edge(e);
    eid[ed.u * n + ed.v] = e;
    eid[ed.v * n + ed.u] = e;
  }
  std::vector<Triangle> triangles;
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) {
      if (eid[x * n + y] == kUnset) continue;
      for (int z = y + 1; z < n; ++z)
        if (eid[y * n + z] != kUnset && eid[z * n + x] != kUnset)
          triangles.push_back({x, y, z});
    }

  TriangleSet ts{dist, triangles};
  std::vector<ClosureViolation> viols = closure_violations(ts, g + 1);
  if (!viols.empty())
    throw std::logic_error("lift_certificate: lifted family is not closed (" +
                           std::to_string(viols.size()) + " violations)");
  if (triangles.empty() && cover.order() > 2)
    throw std::logic_error("lift_certificate: no triangles in the lifted graph");

  return Certificate{cover, g + 1, dist, triangles};
}

}  // namespace sgh

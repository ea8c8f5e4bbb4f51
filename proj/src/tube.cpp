#include "sgh/tube.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>
#include <string>

namespace sgh {

TubeDims tube_dims(int g) {
  if (g < 2) throw std::invalid_argument("tube_dims: girth must be at least 2");
  if (g > 64) throw std::invalid_argument("tube_dims: girth above 64 is unsupported");
  return {g / 2, (g + 1) / 2};
}

int tube_vertex(const TubeDims& d, TubeCoord c) {
  if (c.col < 0 || c.col >= d.cols() || c.row < 0 || c.row >= d.rows)
    throw std::out_of_range("tube_vertex: coordinate out of range");
  return c.col * d.rows + c.row;
}

TubeCoord tube_coord(const TubeDims& d, int id) {
  if (id < 0 || id >= d.order()) throw std::out_of_range("tube_coord: id out of range");
  return {id / d.rows, id % d.rows};
}

namespace {

int col_distance(const TubeDims& d, int a, int b) {
  int raw = ((a - b) % d.cols() + d.cols()) % d.cols();
  return std::min(raw, d.cols() - raw);
}

std::vector<SignedEdge> cylinder_edges(const TubeDims& d) {
  std::vector<SignedEdge> edges;
  for (int i = 0; i < d.cols(); ++i)
    for (int j = 0; j < d.rows; ++j) {
      edges.push_back({tube_vertex(d, {i, j}), tube_vertex(d, {(i + 1) % d.cols(), j}),
                       Sign::Plus});
      if (j + 1 < d.rows) edges.push_back({tube_vertex(d, {i, j}), tube_vertex(d, {i, j + 1}),
                                           Sign::Plus});
    }
  return edges;
}

}  // namespace

SignedGraph cylinder_graph(int g) {
  TubeDims d = tube_dims(g);
  return SignedGraph(d.order(), cylinder_edges(d), "cyl(" + std::to_string(g) + ")");
}

SignedGraph twisted_tube(int g) {
  TubeDims d = tube_dims(g);
  std::vector<SignedEdge> edges = cylinder_edges(d);
  for (int i = 0; i < d.cols(); ++i)
    edges.push_back({tube_vertex(d, {i, d.rows - 1}),
                     tube_vertex(d, {(i + d.half_cols) % d.cols(), 0}), Sign::Minus});
  return SignedGraph(d.order(), std::move(edges), "tt(" + std::to_string(g) + ")");
}

TubeDistance tube_distance(int g, TubeCoord a, TubeCoord b) {
  TubeDims d = tube_dims(g);
  tube_vertex(d, a);
  tube_vertex(d, b);
  int plus = col_distance(d, a.col, b.col) + std::abs(a.row - b.row);
  return {plus, g - plus};
}

std::vector<std::uint64_t> tube_cube_embedding(int g) {
  TubeDims d = tube_dims(g);
  int a = d.half_cols;
  auto colmask = [&](int i) -> std::uint64_t {
    std::uint64_t band = (std::uint64_t{1} << a) - 1;
    if (i <= a) return (std::uint64_t{1} << i) - 1;
    return band ^ ((std::uint64_t{1} << (i - a)) - 1);
  };
  auto rowmask = [&](int j) -> std::uint64_t {
    return ((std::uint64_t{1} << j) - 1) << a;
  };
  std::vector<std::uint64_t> labels(d.order());
  for (int i = 0; i < d.cols(); ++i)
    for (int j = 0; j < d.rows; ++j) labels[tube_vertex(d, {i, j})] = colmask(i) ^ rowmask(j);

  std::set<std::uint64_t> uniq(labels.begin(), labels.end());
  if (uniq.size() != labels.size())
    throw std::logic_error("tube_cube_embedding: labels collide");
  std::uint64_t full = (std::uint64_t{1} << (g - 1)) - 1;
  SignedGraph tube = twisted_tube(g);
  for (const SignedEdge& e : tube.edges()) {
    std::uint64_t x = labels[e.u] ^ labels[e.v];
    bool ok = negative(e.sign) ? x == full : std::popcount(x) == 1;
    if (!ok) throw std::logic_error("tube_cube_embedding: an edge breaks the cube adjacency");
  }
  return labels;
}

TubeAutomorphism tube_automorphism(int g, TubeCoord from, TubeCoord to) {
  TubeDims d = tube_dims(g);
  tube_vertex(d, from);
  tube_vertex(d, to);
  int rows = d.rows, cols = d.cols(), a_shift = d.half_cols;
  int b = ((to.row - from.row) % rows + rows) % rows;
  bool wrap = from.row + b >= rows;
  int a = ((to.col - from.col - (wrap ? a_shift : 0)) % cols + cols) % cols;

  TubeAutomorphism out;
  out.vertex_map.resize(d.order());
  for (int id = 0; id < d.order(); ++id) {
    TubeCoord c = tube_coord(d, id);
    int nj = c.row + b;
    int nc = c.col + a;
    if (nj >= rows) {
      nj -= rows;
      nc += a_shift;
    }
    out.vertex_map[id] = tube_vertex(d, {nc % cols, nj});
  }
  if (b > 0)
    for (int id = 0; id < d.order(); ++id)
      if (tube_coord(d, id).row >= b) out.switching.vertices.push_back(id);

  if (out.vertex_map[tube_vertex(d, from)] != tube_vertex(d, to))
    throw std::logic_error("tube_automorphism: target vertex missed");
  SignedGraph tube = twisted_tube(g);
  std::vector<SignedEdge> mapped;
  for (const SignedEdge& e : tube.edges())
    mapped.push_back({out.vertex_map[e.u], out.vertex_map[e.v], e.sign});
  SignedGraph image(tube.order(), std::move(mapped));
  if (!same_signature(image, switched(tube, out.switching)))
    throw std::logic_error("tube_automorphism: map is not a switched automorphism");
  return out;
}

namespace {

int edge_between(const SignedGraph& g, int u, int v, Sign s) {
  for (const Arc& arc : g.arcs(u))
    if (arc.to == v && g.edge(arc.edge).sign == s) return arc.edge;
  return -1;
}

void verify_cycle_witness(const SignedGraph& tube, const std::vector<int>& cycle, int g, int u,
                          int v) {
  if (static_cast<int>(cycle.size()) != g)
    throw std::logic_error("tube cycle witness: wrong length");
  std::set<int> uniq(cycle.begin(), cycle.end());
  if (uniq.size() != cycle.size() || !uniq.count(u) || !uniq.count(v))
    throw std::logic_error("tube cycle witness: vertices repeat or miss the pair");
  for (int k = 0; k < g; ++k) {
    Sign want = k + 1 < g ? Sign::Plus : Sign::Minus;
    if (edge_between(tube, cycle[k], cycle[(k + 1) % g], want) < 0)
      throw std::logic_error("tube cycle witness: a step is not an edge of the right sign");
  }
}

}  // namespace

std::vector<int> tube_negative_cycle_witness(int g, int u, int v) {
  TubeDims d = tube_dims(g);
  TubeCoord cu = tube_coord(d, u), cv = tube_coord(d, v);
  SignedGraph tube = twisted_tube(g);
  if (g == 2) {
    std::vector<int> cycle{u, u ^ 1};
    verify_cycle_witness(tube, cycle, g, u, v);
    return cycle;
  }
  if (cu.row > cv.row) std::swap(cu, cv);
  int a = d.half_cols, cols = d.cols();
  int right = ((cv.col - cu.col) % cols + cols) % cols;
  // The upper vertex sits within a sideways steps in the chosen direction.
  int step = right <= a ? 1 : -1;

  // Climb through the lower vertex's column past both rows, cross the half
  // turn of columns through the upper vertex, climb to the top, and close
  // over the seam edge whose ends bracket the staircase.
  std::vector<int> cycle;
  for (int j = 0; j <= cv.row; ++j) cycle.push_back(tube_vertex(d, {cu.col, j}));
  int col = cu.col;
  for (int t = 1; t <= a; ++t) {
    col = ((col + step) % cols + cols) % cols;
    cycle.push_back(tube_vertex(d, {col, cv.row}));
  }
  for (int j = cv.row + 1; j < d.rows; ++j) cycle.push_back(tube_vertex(d, {col, j}));
  verify_cycle_witness(tube, cycle, g, u, v);
  return cycle;
}

CompletionResult triangle_completion(int g, int p, int q, int r, TubeCoord x, TubeCoord y) {
  TubeDims d = tube_dims(g);
  tube_vertex(d, x);
  tube_vertex(d, y);
  for (int e : {p, q, r})
    if (e < 1 || e > g - 1)
      throw std::invalid_argument("triangle_completion: entries must lie in 1..g-1");
  if (!triple_is_wide({p, q, r, g}))
    throw std::invalid_argument("triangle_completion: triple is not wide");
  if (tube_distance(g, x, y).plus != p)
    throw std::invalid_argument("triangle_completion: pair does not realise the first entry");

  struct Target {
    int zq, zr;
    bool mirrored;
  };
  for (Target t : {Target{q, r, false}, Target{g - q, g - r, true}}) {
    for (int c = 0; c < d.cols(); ++c) {
      int rem = t.zq - col_distance(d, c, x.col);
      if (rem < 0) continue;
      for (int dir : {1, -1}) {
        if (rem == 0 && dir < 0) continue;
        int row = x.row + dir * rem;
        if (row < 0 || row >= d.rows) continue;
        TubeCoord z{c, row};
        if (tube_distance(g, z, x).plus == t.zq && tube_distance(g, z, y).plus == t.zr)
          return {z, t.mirrored};
      }
    }
  }
  throw std::logic_error("triangle_completion: no corner realises the triple");
}

Certificate tube_certificate(int g) {
  TubeDims d = tube_dims(g);
  SignedGraph tube = twisted_tube(g);
  int n = tube.order();

  std::vector<WeightedEdge> dist_edges;
  for (int u = 0; u < n; ++u) {
    std::vector<int> ad = algebraic_distances_from(tube, u);
    for (int v = u + 1; v < n; ++v) {
      int plus = tube_distance(g, tube_coord(d, u), tube_coord(d, v)).plus;
      if (girth_transform(ad[v], g) != plus)
        throw std::logic_error("tube_certificate: distance formula disagrees with search");
      dist_edges.push_back({u, v, plus});
    }
  }
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) tube_negative_cycle_witness(g, u, v);
  WeightedSignedGraph dist(n, dist_edges);

  std::vector<Triangle> triangles;
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      for (int z = y + 1; z < n; ++z) triangles.push_back({x, y, z});

  std::vector<ClosureViolation> viols = closure_violations({dist, triangles}, g);
  if (!viols.empty())
    throw std::logic_error("tube_certificate: " + std::to_string(viols.size()) +
                           " closure violations");

  std::vector<std::vector<std::pair<int, int>>> wide_by_first(g);
  for (int p = 1; p <= g - 1; ++p)
    for (int q = 1; q <= g - 1; ++q)
      for (int r = 1; r <= g - 1; ++r)
        if (triple_is_wide({p, q, r, g})) wide_by_first[p].push_back({q, r});
  for (const WeightedEdge& e : dist_edges) {
    TubeCoord cu = tube_coord(d, e.u), cv = tube_coord(d, e.v);
    for (auto [q, r] : wide_by_first[e.weight]) triangle_completion(g, e.weight, q, r, cu, cv);
  }

  return Certificate{tube, g, dist, triangles};
}

}  // namespace sgh

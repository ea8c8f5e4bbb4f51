#include "sgh/edc.hpp"

#include <stdexcept>

namespace sgh {

SignedGraph extended_double_cover(const SignedGraph& g, CoverMap* map) {
  std::vector<SignedEdge> edges;
  edges.reserve(g.order() + 2 * g.edges().size());
  if (map) {
    map->rung_edge.assign(g.order(), -1);
    map->edge_pair.assign(g.edges().size(), {-1, -1});
  }
  for (int v = 0; v < g.order(); ++v) {
    if (map) map->rung_edge[v] = static_cast<int>(edges.size());
    edges.push_back({cover_plus(v), cover_minus(v), Sign::Minus});
  }
  for (int e = 0; e < static_cast<int>(g.edges().size()); ++e) {
    const SignedEdge& ed = g.edge(e);
    int first = static_cast<int>(edges.size());
    if (negative(ed.sign)) {
      edges.push_back({cover_plus(ed.u), cover_minus(ed.v), Sign::Plus});
      // A negative loop contributes both ends of the same cover edge once.
      if (ed.u != ed.v) edges.push_back({cover_minus(ed.u), cover_plus(ed.v), Sign::Plus});
    } else {
      edges.push_back({cover_plus(ed.u), cover_plus(ed.v), Sign::Plus});
      edges.push_back({cover_minus(ed.u), cover_minus(ed.v), Sign::Plus});
    }
    if (map) {
      bool single = ed.u == ed.v && negative(ed.sign);
      map->edge_pair[e] = {first, single ? first : first + 1};
    }
  }
  SignedGraph cover(2 * g.order(), std::move(edges),
                    g.name().empty() ? "" : g.name() + "^");
  return cover;
}

WeightedSignedGraph extended_double_cover(const WeightedSignedGraph& g) {
  std::vector<WeightedEdge> edges;
  edges.reserve(g.order() + 4 * g.edges().size());
  for (int v = 0; v < g.order(); ++v)
    edges.push_back({cover_plus(v), cover_minus(v), -1});
  for (const WeightedEdge& ed : g.edges()) {
    int p = ed.weight > 0 ? ed.weight : -ed.weight;
    if (ed.weight > 0) {
      edges.push_back({cover_plus(ed.u), cover_plus(ed.v), p});
      edges.push_back({cover_minus(ed.u), cover_minus(ed.v), p});
      edges.push_back({cover_plus(ed.u), cover_minus(ed.v), -(p + 1)});
      edges.push_back({cover_minus(ed.u), cover_plus(ed.v), -(p + 1)});
    } else {
      edges.push_back({cover_plus(ed.u), cover_minus(ed.v), p});
      edges.push_back({cover_minus(ed.u), cover_plus(ed.v), p});
      edges.push_back({cover_plus(ed.u), cover_plus(ed.v), -(p + 1)});
      edges.push_back({cover_minus(ed.u), cover_minus(ed.v), -(p + 1)});
    }
  }
  return WeightedSignedGraph(2 * g.order(), std::move(edges),
                             g.name().empty() ? "" : g.name() + "^");
}

SignedGraph signed_projective_cube(int k) {
  if (k < 1 || k > 20) throw std::invalid_argument("signed_projective_cube: k must be 1..20");
  int n = 1 << k;
  int full = n - 1;
  std::vector<SignedEdge> edges;
  for (int v = 0; v < n; ++v) {
    for (int b = 0; b < k; ++b) {
      int w = v ^ (1 << b);
      if (v < w) edges.push_back({v, w, Sign::Plus});
    }
    int w = v ^ full;
    if (v < w) edges.push_back({v, w, Sign::Minus});
  }
  return SignedGraph(n, std::move(edges), "spc(" + std::to_string(k) + ")");
}

std::vector<int> projective_cube_relabel(int k) {
  if (k < 1 || k > 20) throw std::invalid_argument("projective_cube_relabel: k must be 1..20");
  int base_n = 1 << (k - 1);
  int full = (1 << k) - 1;
  std::vector<int> relabel(2 * base_n);
  for (int v = 0; v < base_n; ++v) {
    relabel[cover_plus(v)] = v;
    relabel[cover_minus(v)] = v ^ full;
  }
  return relabel;
}

Walk lift_walk(const SignedGraph& base, const Walk& w, Sign start_side) {
  if (!walk_valid(base, w)) throw std::invalid_argument("lift_walk: walk does not follow adjacency");
  CoverMap map;
  SignedGraph cover = extended_double_cover(base, &map);

  Walk out;
  int at = w.start;
  bool minus_side = negative(start_side);
  out.start = minus_side ? cover_minus(at) : cover_plus(at);
  for (int e : w.edges) {
    const SignedEdge& ed = base.edge(e);
    bool crossing = negative(ed.sign);
    int from_cover = minus_side ? cover_minus(at) : cover_plus(at);
    at = ed.u == at ? ed.v : ed.u;
    if (crossing) minus_side = !minus_side;
    int to_cover = minus_side ? cover_minus(at) : cover_plus(at);
    // Pick whichever image edge of e joins the two cover vertices.
    int chosen = -1;
    for (int ce : map.edge_pair[e]) {
      const SignedEdge& cd = cover.edge(ce);
      if ((cd.u == from_cover && cd.v == to_cover) || (cd.v == from_cover && cd.u == to_cover)) {
        chosen = ce;
        break;
      }
    }
    if (chosen < 0) throw std::logic_error("lift_walk: missing cover image edge");
    out.edges.push_back(chosen);
  }
  // A closed negative walk surfaces on the far side; the start rung closes it.
  if (at == w.start && negative(walk_sign(base, w))) out.edges.push_back(map.rung_edge[w.start]);
  return out;
}

}  // namespace sgh

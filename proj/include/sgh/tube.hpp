#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sgh/distance.hpp"
#include "sgh/signed_graph.hpp"

namespace sgh {

// The tube of girth g is a cycle of 2*floor(g/2) columns times a path of
// ceil(g/2) rows; the twisted tube closes the rows with a half-turn seam of
// negative edges. Vertex (col, row) has linear id col * rows + row.
struct TubeDims {
  int half_cols;  // floor(g/2)
  int rows;       // ceil(g/2)
  int cols() const { return 2 * half_cols; }
  int order() const { return cols() * rows; }
};

TubeDims tube_dims(int g);

struct TubeCoord {
  int col, row;
  friend bool operator==(const TubeCoord&, const TubeCoord&) = default;
};

int tube_vertex(const TubeDims& d, TubeCoord c);
TubeCoord tube_coord(const TubeDims& d, int id);

// All-positive cylinder; parallel duplicates collapse at small g.
SignedGraph cylinder_graph(int g);
// Cylinder plus the negative seam joining (i, rows-1) to (i + half_cols, 0).
SignedGraph twisted_tube(int g);

// Shortest positive and negative walk lengths between two tube vertices:
// plus is the cylinder distance (circular columns plus rows), minus is g
// minus that, so the two concatenate to a negative closed g-walk.
struct TubeDistance {
  int plus, minus;
  int value() const { return plus < minus ? plus : minus; }
};
TubeDistance tube_distance(int g, TubeCoord a, TubeCoord b);

// Vertex labels of a sign-preserving embedding into the signed projective
// cube of dimension g-1, as g-1 bit words. Verified before returning.
std::vector<std::uint64_t> tube_cube_embedding(int g);

// Transitive symmetry: a vertex permutation plus a switching that together
// carry the twisted tube onto itself with from -> to. Verified.
struct TubeAutomorphism {
  std::vector<int> vertex_map;
  Switching switching;
};
TubeAutomorphism tube_automorphism(int g, TubeCoord from, TubeCoord to);

// Simple negative g-cycle through u and v: a monotone staircase visiting
// both, run from one end of a seam edge to the other and closed over it.
// Exists for every pair, so the result is unconditional; failures throw.
std::vector<int> tube_negative_cycle_witness(int g, int u, int v);

// Third corner z completing the pair (x, y) at positive distance p to a
// triangle whose positive distances realise (q, r) or (g-q, g-r), for a wide
// positive triple (p, q, r). Solves the two distance equations column by
// column, so a throw means no corner exists at all, which would falsify the
// closure of the twisted tube.
struct CompletionResult {
  TubeCoord z;
  bool mirrored;  // true when z realises (g-q, g-r)
};
CompletionResult triangle_completion(int g, int p, int q, int r, TubeCoord x, TubeCoord y);

// Certificate over the complete distance graph of the twisted tube, checked
// twice over: once by closure_violations, once edge-by-edge through
// triangle_completion. Throws on any failure.
Certificate tube_certificate(int g);

}  // namespace sgh

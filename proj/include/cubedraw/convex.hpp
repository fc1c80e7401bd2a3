#pragma once

#include <optional>
#include <vector>

#include "cubedraw/hypercube.hpp"

namespace cubedraw {

// A convex-geometric drawing: a circular order of the vertices (slot 0..n-1,
// clockwise) plus the edge set. Crossings depend only on the order, so no
// coordinates are kept.
struct ConvexDrawing {
  int n = 0;
  std::vector<Vertex> vertex_at;  // slot -> vertex
  std::vector<int> slot_of;       // vertex -> slot
  std::vector<Edge> edges;        // normalized (u < v), sorted, no duplicates

  bool has_edge(const Edge& e) const;
};

// Validates that `order` is a bijection on [0, n) and that edges are loop-free
// and duplicate-free. Throws std::invalid_argument otherwise.
ConvexDrawing make_convex_drawing(const std::vector<Vertex>& order,
                                  const std::vector<Edge>& edges);

// Clockwise slot distance from a to b, in [0, n).
inline int cw_distance(const ConvexDrawing& d, Vertex a, Vertex b) {
  int diff = d.slot_of[b] - d.slot_of[a];
  return diff < 0 ? diff + d.n : diff;
}

// Hull-cycle distance between the endpoints, in [1, n/2].
// Throws std::invalid_argument for edges not in the drawing.
int edge_length(const ConvexDrawing& d, const Edge& e);

// Vertices visited clockwise from v to w; closed includes both endpoints.
std::vector<Vertex> interval_closed(const ConvexDrawing& d, Vertex v, Vertex w);
std::vector<Vertex> interval_open(const ConvexDrawing& d, Vertex v, Vertex w);

// Chords cross iff their endpoints interleave on the circle; edges sharing an
// endpoint never cross.
bool edges_cross(const ConvexDrawing& d, const Edge& e, const Edge& f);

long long count_crossings(const ConvexDrawing& d);
std::vector<std::pair<Edge, Edge>> crossing_pairs(const ConvexDrawing& d);

// Lengths of the edges incident to v, descending.
std::vector<int> vertex_length_tuple(const ConvexDrawing& d, Vertex v);

struct LengthProfileResult {
  std::optional<std::vector<int>> profile;  // descending; empty if irregular
  Vertex witness_a = -1, witness_b = -1;    // two disagreeing vertices
};

LengthProfileResult length_profile(const ConvexDrawing& d);

// Directions of the incident edges longer than `threshold`, sorted by
// descending length; +1 iff the far endpoint lies within the first half of
// the circle clockwise from v. Throws on odd n or ties above the threshold.
std::vector<int> length_rotation(const ConvexDrawing& d, Vertex v, int threshold);

// (n/2) * sum (l_i - 1)(i - 1/2) over the descending profile, evaluated in
// exact integers. Throws std::domain_error if the total is not integral.
long long crossing_formula(const std::vector<int>& profile, int n_vertices);

// Identical crossing-pair sets. Requires the same vertex/edge label sets.
bool weakly_isomorphic(const ConvexDrawing& a, const ConvexDrawing& b);

// Searches Aut(Q_d) for g with g(a) weakly isomorphic to b.
std::optional<CubeAutomorphism> weakly_isomorphic_up_to_automorphism(
    const ConvexDrawing& a, const ConvexDrawing& b, int d);

// Relabel a drawing by a vertex bijection (slots stay put).
ConvexDrawing relabel(const ConvexDrawing& d, const CubeAutomorphism& g);

}  // namespace cubedraw

#pragma once

#include <optional>
#include <vector>

#include "cubedraw/solvers.hpp"

namespace cubedraw {

enum class Side { Left, Right };

// Stage 1 removes leftmost edges, stage 2 rightmost, alternating.
inline Side stage_side(int stage) { return stage % 2 == 1 ? Side::Left : Side::Right; }

struct PeelTrace {
  int stages = 0;
  // removed_stage[i]: 1-based stage at which edge i was removed, 0 = survivor.
  std::vector<int> removed_stage;
  // live_before[s]: edge indices alive at the start of stage s+1.
  std::vector<std::vector<int>> live_before;
};

// Among `live` edges incident to v, the one whose far endpoint comes first
// (Right) or last (Left) when sweeping clockwise from v's slot.
std::optional<Edge> extreme_edge(const ConvexDrawing& d, Vertex v,
                                 const std::vector<Edge>& live, Side side);

// k simultaneous removal stages: every vertex loses its extreme edge on the
// stage's side (each edge removed once even if extreme for both endpoints).
PeelTrace peel(const ConvexDrawing& d, int k);

// Survivor edge after k = floor((|E|-1)/n) stages, extended outward stage by
// stage on alternating sides; a plane simple path with >= 2k+1 edges.
// Throws std::logic_error if the reconstruction revisits a vertex or crosses
// itself.
PlaneSubgraphResult perles_path(const ConvexDrawing& d);

}  // namespace cubedraw

#pragma once

#include <optional>
#include <vector>

#include "cubedraw/convex.hpp"

namespace cubedraw {

// Drawing-agnostic view consumed by the exact solvers: an edge list plus the
// crossing relation. Convex, rectilinear and abstract drawings all reduce to
// this.
struct DrawnGraph {
  int num_vertices = 0;
  std::vector<Edge> edges;              // normalized, sorted
  std::vector<std::vector<char>> crosses;  // |E| x |E|, symmetric

  int edge_index(const Edge& e) const;  // -1 if absent
};

DrawnGraph from_convex(const ConvexDrawing& d);

enum class SubgraphKind { Path, Matching, Subgraph, Cycle };

struct PlaneSubgraphResult {
  std::vector<Edge> edges;
  SubgraphKind kind = SubgraphKind::Subgraph;
  int size = 0;
  bool verified = false;        // passed verify_plane
  bool proven_optimal = false;  // solver exhausted its search space
};

struct SolveBudget {
  long long node_limit = -1;   // <0: unlimited
  double time_limit_s = -1.0;  // <0: unlimited
};

// Maximum pairwise non-crossing edge set (independent set in the crossing
// conflict graph), branch and bound with a greedy incumbent and a clique-cover
// bound. `upper_hint` prunes once that size is reached.
PlaneSubgraphResult max_plane_subgraph(const DrawnGraph& g,
                                       std::optional<int> upper_hint = {},
                                       const SolveBudget& budget = {});

// Maximum-length plane simple path, exhaustive DFS over path extensions.
PlaneSubgraphResult longest_plane_path(const DrawnGraph& g,
                                       const SolveBudget& budget = {});

// Independent set with conflicts = crossing or shared endpoint.
PlaneSubgraphResult max_plane_matching(const DrawnGraph& g,
                                       const SolveBudget& budget = {});

struct CycleSearchResult {
  std::optional<PlaneSubgraphResult> cycle;
  bool exhausted = false;  // search completed; no cycle means proven absence
};

CycleSearchResult find_plane_cycle(const DrawnGraph& g,
                                   std::optional<int> max_len = {},
                                   const SolveBudget& budget = {});

// Plane injective copy of the graph obtained by subdividing each edge of
// K_{1,3} once (center, three middles, three leaves).
bool contains_plane_G0(const DrawnGraph& g);

// Pairwise non-crossing plus the kind's shape invariant (path: one simple
// path; matching: vertex-disjoint; cycle: one simple cycle).
// Throws std::invalid_argument for edges outside the drawing.
bool verify_plane(const DrawnGraph& g, const std::vector<Edge>& edges,
                  SubgraphKind kind);

}  // namespace cubedraw

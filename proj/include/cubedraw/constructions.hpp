#pragma once

#include <cstdint>
#include <vector>

#include "cubedraw/solvers.hpp"

namespace cubedraw {

// The rotated recursive drawing: slot(0x) = 2*slot(x),
// slot(1x) = 2*slot(x) + 2^(d-1) - 1 (mod 2^d), base 00,01,11,10.
ConvexDrawing build_H(int d);  // 2 <= d <= 16

// Same recursion with base 00,11,01,10; the crossing-maximizing drawing.
ConvexDrawing build_R(int d);  // 2 <= d <= 16

struct ParallelConstruction {
  ConvexDrawing drawing;
  // Each entry pairs the two mutually non-crossing longest edges added
  // together in the doubling step.
  std::vector<std::pair<Edge, Edge>> parallel_pairs;
};

// Doubling construction: a twin u_i inserted after each v_i, twin edges
// mirroring the originals, plus the parallel pairs of length 2^(d-1)-1.
ParallelConstruction build_H_parallel(int d);  // 3 <= d <= 12

// Even-parity labels on one arc (ascending), odd-parity on the other.
ConvexDrawing build_bipartite_split(int d);

// x_k in [0, 2^k) such that bit i of x_k - i is 0 for all i in [0, k).
// Computed by the inductive recursion; k <= 62.
uint64_t claim_x(int k);

struct MatchingConstruction {
  PlaneSubgraphResult matching;  // 2d-4 edges
  PlaneSubgraphResult subgraph;  // matching plus the parallel pair, 2d-2 edges
};

// The explicit plane matching of H_d built from the claim_x vertex and its
// antipode. d >= 3.
MatchingConstruction construct_plane_matching(int d);

// The zig-zag plane path of length 2d-3 in H_d. d >= 4. Throws
// std::runtime_error if no sign choice validates (would indicate a
// convention bug).
PlaneSubgraphResult construct_long_plane_path(int d);

// 2^(d-2) * (2^(d-1)(d^2 - 2d + 3) - d^2 - 1).
long long crmax_lower_bound(int d);  // d >= 2

}  // namespace cubedraw

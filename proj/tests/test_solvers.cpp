#include <doctest.h>

#include <stdexcept>

#include <algorithm>
#include <numeric>
#include <random>

#include "cubedraw/constructions.hpp"
#include "cubedraw/solvers.hpp"

using namespace cubedraw;

namespace {

ConvexDrawing random_q3_drawing(std::mt19937_64& rng) {
  HypercubeGraph g = build_hypercube(3);
  std::vector<Vertex> order(8);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  return make_convex_drawing(order, g.edges);
}

// Exhaustive subset oracle, usable up to ~20 edges.
struct SubsetOracle {
  int best_subgraph = 0, best_matching = 0, best_path = 0;

  explicit SubsetOracle(const DrawnGraph& g) {
    int m = static_cast<int>(g.edges.size());
    std::vector<uint32_t> conflict(m, 0);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        if (g.crosses[i][j]) conflict[i] |= 1u << j;
    for (uint32_t mask = 1; mask < (1u << m); ++mask) {
      bool plane = true;
      for (int i = 0; i < m && plane; ++i)
        if (mask >> i & 1 && conflict[i] & mask) plane = false;
      if (!plane) continue;
      int size = __builtin_popcount(mask);
      std::vector<Edge> edges;
      for (int i = 0; i < m; ++i)
        if (mask >> i & 1) edges.push_back(g.edges[i]);
      best_subgraph = std::max(best_subgraph, size);
      if (verify_plane(g, edges, SubgraphKind::Matching))
        best_matching = std::max(best_matching, size);
      if (verify_plane(g, edges, SubgraphKind::Path))
        best_path = std::max(best_path, size);
    }
  }
};

}  // namespace

TEST_CASE("verify_plane shapes") {
  DrawnGraph g = from_convex(
      make_convex_drawing({0, 1, 2, 3}, {{0, 2}, {1, 3}, {0, 1}, {1, 2}}));
  CHECK_FALSE(verify_plane(g, {{0, 2}, {1, 3}}, SubgraphKind::Matching));
  CHECK(verify_plane(g, {{0, 1}, {1, 2}}, SubgraphKind::Path));
  CHECK_FALSE(verify_plane(g, {{0, 1}, {1, 2}}, SubgraphKind::Matching));
  CHECK_FALSE(verify_plane(g, {{0, 1}, {0, 1}}, SubgraphKind::Subgraph));
  CHECK_FALSE(verify_plane(g, {}, SubgraphKind::Path));
  CHECK(verify_plane(g, {}, SubgraphKind::Subgraph));
  CHECK_THROWS_AS(verify_plane(g, {{2, 3}}, SubgraphKind::Subgraph),
                  std::invalid_argument);
}

TEST_CASE("solvers match the subset oracle on random Q_3 orders") {
  std::mt19937_64 rng(23);
  for (int rep = 0; rep < 20; ++rep) {
    DrawnGraph g = from_convex(random_q3_drawing(rng));
    SubsetOracle oracle(g);
    auto sub = max_plane_subgraph(g);
    auto mat = max_plane_matching(g);
    auto path = longest_plane_path(g);
    REQUIRE(sub.proven_optimal);
    REQUIRE(mat.proven_optimal);
    REQUIRE(path.proven_optimal);
    CHECK(sub.size == oracle.best_subgraph);
    CHECK(mat.size == oracle.best_matching);
    CHECK(path.size == oracle.best_path);
    CHECK(sub.verified);
    CHECK(mat.verified);
    CHECK(path.verified);
  }
}

TEST_CASE("exact bounds at small d") {
  CHECK(max_plane_subgraph(from_convex(build_H(3))).size == 4);
  DrawnGraph h4 = from_convex(build_H(4));
  auto sub = max_plane_subgraph(h4);
  auto path = longest_plane_path(h4);
  auto mat = max_plane_matching(h4);
  CHECK(sub.size == 6);
  CHECK(path.size == 5);
  CHECK(mat.size == 4);
  CHECK(sub.proven_optimal);
  CHECK(path.proven_optimal);
  CHECK(mat.proven_optimal);
}

TEST_CASE("crossing-free drawing keeps every edge") {
  // A path drawn in hull order has no crossings.
  DrawnGraph g = from_convex(make_convex_drawing(
      {0, 1, 2, 3, 4}, {{0, 1}, {1, 2}, {2, 3}, {3, 4}}));
  auto sub = max_plane_subgraph(g);
  CHECK(sub.size == 4);
  CHECK(longest_plane_path(g).size == 4);
}

TEST_CASE("matching on a star is one edge") {
  DrawnGraph g = from_convex(make_convex_drawing(
      {0, 1, 2, 3, 4}, {{0, 1}, {0, 2}, {0, 3}, {0, 4}}));
  CHECK(max_plane_matching(g).size == 1);
}

TEST_CASE("plane cycle search") {
  DrawnGraph square = from_convex(make_convex_drawing(
      {0, 1, 2, 3}, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}));
  auto r = find_plane_cycle(square);
  REQUIRE(r.cycle.has_value());
  CHECK(r.cycle->size == 4);
  CHECK(r.cycle->verified);

  auto none = find_plane_cycle(from_convex(build_bipartite_split(3)));
  CHECK(none.exhausted);
  CHECK_FALSE(none.cycle.has_value());

  auto h3 = find_plane_cycle(from_convex(build_H(3)));
  CHECK(h3.exhausted);
  if (h3.cycle) CHECK(h3.cycle->verified);
}

TEST_CASE("G0 containment") {
  // With no crossings at all, abstract containment suffices: Q_3 contains G_0.
  DrawnGraph free;
  HypercubeGraph q3 = build_hypercube(3);
  free.num_vertices = q3.num_vertices();
  free.edges = q3.edges;
  free.crosses.assign(free.edges.size(),
                      std::vector<char>(free.edges.size(), 0));
  CHECK(contains_plane_G0(free));

  CHECK_FALSE(contains_plane_G0(from_convex(build_H(4))));
  CHECK_FALSE(contains_plane_G0(from_convex(build_H(5))));
}

TEST_CASE("budget exhaustion is reported") {
  SolveBudget tiny;
  tiny.node_limit = 1;
  auto r = max_plane_subgraph(from_convex(build_H(4)), {}, tiny);
  CHECK_FALSE(r.proven_optimal);
  auto p = longest_plane_path(from_convex(build_H(4)), tiny);
  CHECK_FALSE(p.proven_optimal);
}

TEST_CASE("monotone solver relations") {
  std::mt19937_64 rng(5);
  for (int rep = 0; rep < 5; ++rep) {
    DrawnGraph g = from_convex(random_q3_drawing(rng));
    int sub = max_plane_subgraph(g).size;
    CHECK(max_plane_matching(g).size <= sub);
    CHECK(longest_plane_path(g).size <= sub);
    CHECK(sub <= static_cast<int>(g.edges.size()));
  }
}

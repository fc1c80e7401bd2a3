#include <doctest.h>

#include <stdexcept>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "cubedraw/constructions.hpp"
#include "cubedraw/perles.hpp"

using namespace cubedraw;

namespace {

ConvexDrawing random_order_drawing(int n, const std::vector<Edge>& edges,
                                   std::mt19937_64& rng) {
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  return make_convex_drawing(order, edges);
}

std::vector<Edge> random_regular_graph(int n, int k, std::mt19937_64& rng) {
  for (;;) {
    std::vector<int> stubs;
    for (int v = 0; v < n; ++v)
      for (int i = 0; i < k; ++i) stubs.push_back(v);
    std::shuffle(stubs.begin(), stubs.end(), rng);
    std::set<Edge> edges;
    bool ok = true;
    for (size_t i = 0; i < stubs.size() && ok; i += 2) {
      Edge e = make_edge(stubs[i], stubs[i + 1]);
      if (e.first == e.second || !edges.insert(e).second) ok = false;
    }
    if (ok) return {edges.begin(), edges.end()};
  }
}

void check_perles(const ConvexDrawing& d) {
  long long m = static_cast<long long>(d.edges.size());
  int k = static_cast<int>((m - 1) / d.n);
  PlaneSubgraphResult r = perles_path(d);
  CHECK(r.verified);
  CHECK(r.size >= 2 * k + 1);
}

}  // namespace

TEST_CASE("extreme edge") {
  ConvexDrawing h3 = build_H(3);
  Vertex v = parse_label("000");
  auto right = extreme_edge(h3, v, h3.edges, Side::Right);
  auto left = extreme_edge(h3, v, h3.edges, Side::Left);
  REQUIRE(right.has_value());
  REQUIRE(left.has_value());
  CHECK(*right == make_edge(v, parse_label("001")));
  CHECK(*left == make_edge(v, parse_label("010")));

  std::vector<Edge> one = {make_edge(v, parse_label("100"))};
  CHECK(extreme_edge(h3, v, one, Side::Right) == one[0]);
  CHECK(extreme_edge(h3, v, one, Side::Left) == one[0]);
  CHECK_FALSE(extreme_edge(h3, parse_label("111"), one, Side::Left).has_value());
}

TEST_CASE("peel stages") {
  ConvexDrawing h3 = build_H(3);
  PeelTrace t = peel(h3, 1);
  int live = 0;
  for (int s : t.removed_stage) live += s == 0;
  CHECK(live >= 4);  // 12 edges, at most 8 removed

  ConvexDrawing h5 = build_H(5);
  PeelTrace t5 = peel(h5, 2);
  int live5 = 0;
  for (int s : t5.removed_stage) live5 += s == 0;
  CHECK(live5 > 0);  // 80 > 2*32
  CHECK(t5.live_before.size() == 2);

  // Q_2 in hull order: one stage can wipe everything (|E| = n).
  ConvexDrawing q2 = make_convex_drawing({0, 1, 3, 2}, build_hypercube(2).edges);
  PeelTrace t2 = peel(q2, 1);
  for (int s : t2.removed_stage) CHECK(s == 1);

  CHECK_THROWS_AS(peel(h3, 0), std::invalid_argument);
}

TEST_CASE("each stage removes between 1 and n edges") {
  std::mt19937_64 rng(11);
  for (int rep = 0; rep < 20; ++rep) {
    ConvexDrawing d =
        random_order_drawing(32, build_hypercube(5).edges, rng);
    PeelTrace t = peel(d, 2);
    for (int stage = 1; stage <= 2; ++stage) {
      int removed = 0;
      for (int s : t.removed_stage) removed += s == stage;
      CHECK(removed >= 1);
      CHECK(removed <= d.n);
    }
  }
}

TEST_CASE("perles path on the explicit drawings") {
  for (int d = 3; d <= 8; ++d) {
    check_perles(build_H(d));
    check_perles(build_R(d));
  }
}

TEST_CASE("perles path on random circular orders of Q_3..Q_5") {
  std::mt19937_64 rng(7);
  for (int d = 3; d <= 5; ++d) {
    HypercubeGraph g = build_hypercube(d);
    for (int rep = 0; rep < 167; ++rep)
      check_perles(random_order_drawing(g.num_vertices(), g.edges, rng));
  }
}

TEST_CASE("perles path on random 4-regular graphs") {
  std::mt19937_64 rng(13);
  for (int rep = 0; rep < 200; ++rep) {
    std::vector<Edge> edges = random_regular_graph(16, 4, rng);
    check_perles(random_order_drawing(16, edges, rng));
  }
}

TEST_CASE("single survivor fallback") {
  // |E| <= n: k = 0, a single-edge path.
  ConvexDrawing d = make_convex_drawing({0, 1, 2, 3}, {{0, 2}, {1, 3}});
  PlaneSubgraphResult r = perles_path(d);
  CHECK(r.size == 1);
  CHECK(r.verified);
}

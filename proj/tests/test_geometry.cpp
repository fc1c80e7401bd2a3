#include <doctest.h>

#include <stdexcept>

#include <algorithm>
#include <cmath>
#include <random>

#include "cubedraw/constructions.hpp"
#include "cubedraw/geometry.hpp"

using namespace cubedraw;

namespace {

// Convex-position integer realization of a convex drawing: slots at equal
// angles, radii jittered in [0.95, 1] * 1e7. The 5% jitter keeps every point
// extreme for n <= 32 (the chord midpoint sits at cos(pi/n) < 0.95).
RectilinearDrawing realize_convex(const ConvexDrawing& d, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> jitter(0.95, 1.0);
  RectilinearDrawing out;
  out.num_vertices = d.n;
  out.edges = d.edges;
  out.coords.resize(d.n);
  for (int s = 0; s < d.n; ++s) {
    double r = 1e7 * jitter(rng);
    double ang = -2 * M_PI * s / d.n;  // clockwise slots
    out.coords[d.vertex_at[s]] = {std::llround(r * std::cos(ang)),
                                  std::llround(r * std::sin(ang))};
  }
  return out;
}

}  // namespace

TEST_CASE("segment crossing predicate") {
  CHECK(segments_cross({0, 0}, {2, 2}, {0, 2}, {2, 0}) == SegCross::Yes);
  CHECK(segments_cross({0, 0}, {1, 0}, {2, 0}, {3, 0}) == SegCross::No);
  CHECK(segments_cross({0, 0}, {2, 0}, {1, 0}, {1, 2}) == SegCross::Degenerate);
  CHECK(segments_cross({0, 0}, {2, 0}, {1, 0}, {3, 0}) == SegCross::Degenerate);
  CHECK(segments_cross({0, 0}, {1, 1}, {1, 1}, {2, 0}) == SegCross::No);  // shared
  CHECK(segments_cross({0, 0}, {2, 2}, {3, 0}, {5, 1}) == SegCross::No);
}

TEST_CASE("segment predicate symmetries") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long long> c(0, 50);
  for (int rep = 0; rep < 2000; ++rep) {
    Point p1{c(rng), c(rng)}, p2{c(rng), c(rng)};
    Point q1{c(rng), c(rng)}, q2{c(rng), c(rng)};
    if (p1 == p2 || q1 == q2) continue;
    SegCross r = segments_cross(p1, p2, q1, q2);
    CHECK(segments_cross(q1, q2, p1, p2) == r);
    CHECK(segments_cross(p2, p1, q1, q2) == r);
    CHECK(segments_cross(p1, p2, q2, q1) == r);
  }
}

TEST_CASE("geometric and combinatorial crossings agree in convex position") {
  std::mt19937_64 rng(17);
  for (int d : {3, 4}) {
    ConvexDrawing cd = build_H(d);
    AbstractSimpleDrawing combinatorial = to_abstract(cd);
    int done = 0;
    while (done < 50) {
      RectilinearDrawing rd = realize_convex(cd, rng);
      AbstractSimpleDrawing geometric;
      try {
        geometric = to_abstract(rd);
      } catch (const std::domain_error&) {
        continue;  // collinear accident; resample
      }
      CHECK(geometric.crossings == combinatorial.crossings);
      ++done;
    }
  }
}

TEST_CASE("random rectilinear drawings") {
  HypercubeGraph q3 = build_hypercube(3);
  RectilinearDrawing a = random_rectilinear(q3, 1);
  RectilinearDrawing b = random_rectilinear(q3, 1);
  CHECK(a.coords == b.coords);  // deterministic per seed
  CHECK(a.coords.size() == 8);
  for (size_t i = 0; i < a.coords.size(); ++i)
    for (size_t j = i + 1; j < a.coords.size(); ++j)
      CHECK(a.coords[i] != a.coords[j]);
  CHECK(random_rectilinear(q3, 2).coords != a.coords);
  CHECK_NOTHROW(to_abstract(a));
}

TEST_CASE("abstract round trips through DrawnGraph") {
  AbstractSimpleDrawing f7 = figure7_drawing();
  CHECK(f7.edges.size() == 12);
  CHECK(f7.crossings.size() == 22);
  DrawnGraph g = from_abstract(f7);
  int count = 0;
  for (size_t i = 0; i < g.edges.size(); ++i)
    for (size_t j = i + 1; j < g.edges.size(); ++j)
      count += g.crosses[i][j];
  CHECK(count == 22);

  AbstractSimpleDrawing bad = f7;
  bad.crossings.push_back({0, 1});  // edges (0,1) and (0,3) share vertex 0
  CHECK_THROWS_AS(from_abstract(bad), std::invalid_argument);
}

TEST_CASE("figure 7 validation") {
  auto rep = validate_figure7(figure7_drawing());
  CHECK(rep.red_red_complete);
  CHECK(rep.red_two_blacks);
  CHECK(rep.red_hits_blue_cycle);
  CHECK(rep.cycles_plane);
  CHECK(rep.longest_plane_path_len == 3);
  CHECK(rep.no_plane_path_of_length_4);
  CHECK(rep.all_ok());
}

TEST_CASE("figure 7 mutations are caught") {
  AbstractSimpleDrawing f7 = figure7_drawing();
  DrawnGraph g = from_abstract(f7);
  int i04 = g.edge_index({0, 4}), i15 = g.edge_index({1, 5});
  AbstractSimpleDrawing mutated = f7;
  std::erase_if(mutated.crossings, [&](std::pair<int, int> c) {
    return c == std::pair<int, int>{std::min(i04, i15), std::max(i04, i15)};
  });
  auto rep = validate_figure7(mutated);
  CHECK_FALSE(rep.red_red_complete);
  CHECK_FALSE(rep.all_ok());

  AbstractSimpleDrawing stripped = f7;
  stripped.crossings.clear();
  auto rep2 = validate_figure7(stripped);
  CHECK_FALSE(rep2.no_plane_path_of_length_4);
  CHECK(rep2.longest_plane_path_len >= 4);
}

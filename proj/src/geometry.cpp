#include "cubedraw/geometry.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace cubedraw {

namespace {

using Wide = __int128;

int orientation(Point a, Point b, Point c) {
  Wide cross = Wide(b.x - a.x) * (c.y - a.y) - Wide(b.y - a.y) * (c.x - a.x);
  return cross > 0 ? 1 : cross < 0 ? -1 : 0;
}

// c collinear with a,b assumed; is c within the closed bounding box?
bool in_box(Point a, Point b, Point c) {
  return std::min(a.x, b.x) <= c.x && c.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= c.y && c.y <= std::max(a.y, b.y);
}

}  // namespace

SegCross segments_cross(Point p1, Point p2, Point q1, Point q2) {
  if (p1 == q1 || p1 == q2 || p2 == q1 || p2 == q2) return SegCross::No;
  int o1 = orientation(p1, p2, q1);
  int o2 = orientation(p1, p2, q2);
  int o3 = orientation(q1, q2, p1);
  int o4 = orientation(q1, q2, p2);
  if (o1 != 0 && o2 != 0 && o3 != 0 && o4 != 0)
    return (o1 != o2 && o3 != o4) ? SegCross::Yes : SegCross::No;
  // Some endpoint is collinear with the other segment: degenerate only if the
  // segments actually touch.
  if ((o1 == 0 && in_box(p1, p2, q1)) || (o2 == 0 && in_box(p1, p2, q2)) ||
      (o3 == 0 && in_box(q1, q2, p1)) || (o4 == 0 && in_box(q1, q2, p2)))
    return SegCross::Degenerate;
  return SegCross::No;
}

AbstractSimpleDrawing to_abstract(const ConvexDrawing& d) {
  AbstractSimpleDrawing out;
  out.num_vertices = d.n;
  out.edges = d.edges;
  for (size_t i = 0; i < d.edges.size(); ++i)
    for (size_t j = i + 1; j < d.edges.size(); ++j)
      if (edges_cross(d, d.edges[i], d.edges[j]))
        out.crossings.emplace_back(static_cast<int>(i), static_cast<int>(j));
  return out;
}

AbstractSimpleDrawing to_abstract(const RectilinearDrawing& d) {
  AbstractSimpleDrawing out;
  out.num_vertices = d.num_vertices;
  out.edges = d.edges;
  for (size_t i = 0; i < d.edges.size(); ++i)
    for (size_t j = i + 1; j < d.edges.size(); ++j) {
      SegCross c = segments_cross(d.coords[d.edges[i].first],
                                  d.coords[d.edges[i].second],
                                  d.coords[d.edges[j].first],
                                  d.coords[d.edges[j].second]);
      if (c == SegCross::Degenerate)
        throw std::domain_error("degenerate edge pair in rectilinear drawing");
      if (c == SegCross::Yes)
        out.crossings.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
  return out;
}

DrawnGraph from_abstract(const AbstractSimpleDrawing& d) {
  DrawnGraph g;
  g.num_vertices = d.num_vertices;
  g.edges = d.edges;
  std::vector<size_t> perm(d.edges.size());
  for (size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  std::sort(g.edges.begin(), g.edges.end());
  // Map original indices to sorted positions.
  std::vector<int> where(d.edges.size());
  for (size_t i = 0; i < d.edges.size(); ++i) {
    int idx = g.edge_index(d.edges[i]);
    if (idx < 0) throw std::invalid_argument("bad edge list");
    where[i] = idx;
  }
  size_t m = g.edges.size();
  g.crosses.assign(m, std::vector<char>(m, 0));
  for (auto [i, j] : d.crossings) {
    const Edge& e = d.edges[i];
    const Edge& f = d.edges[j];
    if (e.first == f.first || e.first == f.second || e.second == f.first ||
        e.second == f.second)
      throw std::invalid_argument("crossing pair shares an endpoint");
    g.crosses[where[i]][where[j]] = g.crosses[where[j]][where[i]] = 1;
  }
  return g;
}

DrawnGraph from_rectilinear(const RectilinearDrawing& d) {
  return from_abstract(to_abstract(d));
}

RectilinearDrawing random_rectilinear(const HypercubeGraph& g, uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long long> coord(0, (1 << 20) - 1);
  int n = g.num_vertices();

  for (int attempt = 0; attempt < 1000; ++attempt) {
    RectilinearDrawing d;
    d.num_vertices = n;
    d.edges = g.edges;
    d.coords.resize(n);
    for (int v = 0; v < n; ++v) d.coords[v] = {coord(rng), coord(rng)};

    bool ok = true;
    for (int a = 0; a < n && ok; ++a)
      for (int b = a + 1; b < n; ++b)
        if (d.coords[a] == d.coords[b]) { ok = false; break; }
    // No vertex on the open segment of any edge.
    for (const Edge& e : d.edges) {
      if (!ok) break;
      for (int w = 0; w < n; ++w) {
        if (w == e.first || w == e.second) continue;
        Point a = d.coords[e.first], b = d.coords[e.second], c = d.coords[w];
        if (orientation(a, b, c) == 0 && in_box(a, b, c)) { ok = false; break; }
      }
    }
    if (!ok) continue;
    try {
      to_abstract(d);
    } catch (const std::domain_error&) {
      continue;
    }
    return d;
  }
  throw std::runtime_error("could not reach general position in 1000 attempts");
}

const char* const kFigure7VertexNames[8] = {"a", "b", "c", "d",
                                            "a'", "b'", "c'", "d'"};

namespace {

const std::vector<Edge> kBlack = {{0, 1}, {1, 2}, {2, 3}, {0, 3}};
const std::vector<Edge> kBlue = {{4, 5}, {5, 6}, {6, 7}, {4, 7}};
const std::vector<Edge> kRed = {{0, 4}, {1, 5}, {2, 6}, {3, 7}};

}  // namespace

AbstractSimpleDrawing figure7_drawing() {
  AbstractSimpleDrawing d;
  d.num_vertices = 8;
  for (auto* cls : {&kBlack, &kBlue, &kRed})
    for (const Edge& e : *cls) d.edges.push_back(e);
  std::sort(d.edges.begin(), d.edges.end());

  auto idx = [&](Edge e) {
    auto it = std::lower_bound(d.edges.begin(), d.edges.end(), e);
    return static_cast<int>(it - d.edges.begin());
  };
  auto add = [&](Edge e, Edge f) {
    int i = idx(e), j = idx(f);
    d.crossings.emplace_back(std::min(i, j), std::max(i, j));
  };

  // All red spokes pairwise cross.
  for (size_t i = 0; i < kRed.size(); ++i)
    for (size_t j = i + 1; j < kRed.size(); ++j) add(kRed[i], kRed[j]);
  // Spoke xx' crosses the two outer edges not incident to x ...
  add({0, 4}, {1, 2});
  add({0, 4}, {2, 3});
  add({1, 5}, {2, 3});
  add({1, 5}, {0, 3});
  add({2, 6}, {0, 3});
  add({2, 6}, {0, 1});
  add({3, 7}, {0, 1});
  add({3, 7}, {1, 2});
  // ... and one inner-cycle edge: spokes landing on the right half of the
  // inner cycle (a', d') sweep across its left edge b'c' and vice versa.
  add({0, 4}, {5, 6});
  add({1, 5}, {4, 7});
  add({2, 6}, {4, 7});
  add({3, 7}, {5, 6});
  // Each outer edge crosses the inner edge bulging past it: ab over c'd',
  // bc over b'c', cd over a'b', da over a'd'.
  add({0, 1}, {6, 7});
  add({1, 2}, {5, 6});
  add({2, 3}, {4, 5});
  add({0, 3}, {4, 7});

  std::sort(d.crossings.begin(), d.crossings.end());
  return d;
}

Figure7Report validate_figure7(const AbstractSimpleDrawing& d) {
  Figure7Report rep;
  DrawnGraph g = from_abstract(d);

  auto crosses = [&](Edge e, Edge f) {
    int i = g.edge_index(e), j = g.edge_index(f);
    if (i < 0 || j < 0) throw std::invalid_argument("not the figure-7 graph");
    return g.crosses[i][j] != 0;
  };

  rep.red_red_complete = true;
  for (size_t i = 0; i < kRed.size(); ++i)
    for (size_t j = i + 1; j < kRed.size(); ++j)
      if (!crosses(kRed[i], kRed[j])) rep.red_red_complete = false;
  if (!rep.red_red_complete)
    rep.failures.push_back("some red pair does not cross");

  rep.red_two_blacks = true;
  for (const Edge& r : kRed) {
    int count = 0;
    for (const Edge& b : kBlack) count += crosses(r, b);
    if (count != 2) rep.red_two_blacks = false;
  }
  if (!rep.red_two_blacks)
    rep.failures.push_back("a red edge does not cross exactly two black edges");

  rep.red_hits_blue_cycle = true;
  for (const Edge& r : kRed) {
    int count = 0;
    for (const Edge& b : kBlue) count += crosses(r, b);
    if (count < 1) rep.red_hits_blue_cycle = false;
  }
  if (!rep.red_hits_blue_cycle)
    rep.failures.push_back("a red edge misses the blue cycle");

  rep.cycles_plane = true;
  for (auto* cls : {&kBlack, &kBlue})
    for (size_t i = 0; i < cls->size(); ++i)
      for (size_t j = i + 1; j < cls->size(); ++j)
        if (crosses((*cls)[i], (*cls)[j])) rep.cycles_plane = false;
  if (!rep.cycles_plane)
    rep.failures.push_back("a black or blue cycle crosses itself");

  rep.longest_plane_path_len = longest_plane_path(g).size;
  rep.no_plane_path_of_length_4 = rep.longest_plane_path_len <= 3;
  if (!rep.no_plane_path_of_length_4)
    rep.failures.push_back("a plane path of length >= 4 exists");
  return rep;
}

}  // namespace cubedraw

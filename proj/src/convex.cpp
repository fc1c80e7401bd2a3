#include "cubedraw/convex.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace cubedraw {

bool ConvexDrawing::has_edge(const Edge& e) const {
  Edge key = make_edge(e.first, e.second);
  return std::binary_search(edges.begin(), edges.end(), key);
}

ConvexDrawing make_convex_drawing(const std::vector<Vertex>& order,
                                  const std::vector<Edge>& edges) {
  ConvexDrawing d;
  d.n = static_cast<int>(order.size());
  d.vertex_at = order;
  d.slot_of.assign(d.n, -1);
  for (int s = 0; s < d.n; ++s) {
    Vertex v = order[s];
    if (v < 0 || v >= d.n || d.slot_of[v] != -1)
      throw std::invalid_argument("order is not a bijection on [0,n)");
    d.slot_of[v] = s;
  }
  d.edges.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.first == e.second) throw std::invalid_argument("self-loop");
    if (e.first < 0 || e.first >= d.n || e.second < 0 || e.second >= d.n)
      throw std::invalid_argument("edge endpoint out of range");
    d.edges.push_back(make_edge(e.first, e.second));
  }
  std::sort(d.edges.begin(), d.edges.end());
  if (std::adjacent_find(d.edges.begin(), d.edges.end()) != d.edges.end())
    throw std::invalid_argument("duplicate edge");
  return d;
}

int edge_length(const ConvexDrawing& d, const Edge& e) {
  if (!d.has_edge(e)) throw std::invalid_argument("unknown edge");
  int cw = cw_distance(d, e.first, e.second);
  return std::min(cw, d.n - cw);
}

static std::vector<Vertex> interval_impl(const ConvexDrawing& d, Vertex v,
                                         Vertex w, bool closed) {
  if (v < 0 || v >= d.n || w < 0 || w >= d.n || d.slot_of[v] < 0 || d.slot_of[w] < 0)
    throw std::invalid_argument("vertex not in drawing");
  if (v == w) throw std::invalid_argument("interval endpoints must differ");
  std::vector<Vertex> out;
  int span = cw_distance(d, v, w);
  if (closed) {
    for (int k = 0; k <= span; ++k)
      out.push_back(d.vertex_at[(d.slot_of[v] + k) % d.n]);
  } else {
    for (int k = 1; k < span; ++k)
      out.push_back(d.vertex_at[(d.slot_of[v] + k) % d.n]);
  }
  return out;
}

std::vector<Vertex> interval_closed(const ConvexDrawing& d, Vertex v, Vertex w) {
  return interval_impl(d, v, w, true);
}

std::vector<Vertex> interval_open(const ConvexDrawing& d, Vertex v, Vertex w) {
  return interval_impl(d, v, w, false);
}

// Interleaving test on slots; assumes all four endpoints distinct.
static bool slots_interleave(int n, int a1, int a2, int b1, int b2) {
  auto inside = [&](int x) {
    int span = a2 - a1;
    if (span < 0) span += n;
    int off = x - a1;
    if (off < 0) off += n;
    return off > 0 && off < span;
  };
  return inside(b1) != inside(b2);
}

bool edges_cross(const ConvexDrawing& d, const Edge& e, const Edge& f) {
  if (!d.has_edge(e) || !d.has_edge(f)) throw std::invalid_argument("unknown edge");
  if (e.first == f.first || e.first == f.second || e.second == f.first ||
      e.second == f.second)
    return false;
  return slots_interleave(d.n, d.slot_of[e.first], d.slot_of[e.second],
                          d.slot_of[f.first], d.slot_of[f.second]);
}

long long count_crossings(const ConvexDrawing& d) {
  long long total = 0;
  const auto& es = d.edges;
  for (size_t i = 0; i < es.size(); ++i)
    for (size_t j = i + 1; j < es.size(); ++j) {
      const Edge& e = es[i];
      const Edge& f = es[j];
      if (e.first == f.first || e.first == f.second || e.second == f.first ||
          e.second == f.second)
        continue;
      total += slots_interleave(d.n, d.slot_of[e.first], d.slot_of[e.second],
                                d.slot_of[f.first], d.slot_of[f.second]);
    }
  return total;
}

std::vector<std::pair<Edge, Edge>> crossing_pairs(const ConvexDrawing& d) {
  std::vector<std::pair<Edge, Edge>> out;
  const auto& es = d.edges;
  for (size_t i = 0; i < es.size(); ++i)
    for (size_t j = i + 1; j < es.size(); ++j)
      if (edges_cross(d, es[i], es[j])) out.emplace_back(es[i], es[j]);
  return out;
}

std::vector<int> vertex_length_tuple(const ConvexDrawing& d, Vertex v) {
  std::vector<int> lengths;
  for (const Edge& e : d.edges)
    if (e.first == v || e.second == v) lengths.push_back(edge_length(d, e));
  std::sort(lengths.rbegin(), lengths.rend());
  return lengths;
}

LengthProfileResult length_profile(const ConvexDrawing& d) {
  LengthProfileResult r;
  if (d.n == 0) return r;
  std::vector<int> ref = vertex_length_tuple(d, d.vertex_at[0]);
  for (int s = 1; s < d.n; ++s) {
    Vertex v = d.vertex_at[s];
    if (vertex_length_tuple(d, v) != ref) {
      r.witness_a = d.vertex_at[0];
      r.witness_b = v;
      return r;
    }
  }
  r.profile = std::move(ref);
  return r;
}

std::vector<int> length_rotation(const ConvexDrawing& d, Vertex v, int threshold) {
  if (d.n % 2 != 0) throw std::invalid_argument("length-rotation needs even n");
  std::vector<std::pair<int, int>> longs;  // (length, direction)
  for (const Edge& e : d.edges) {
    if (e.first != v && e.second != v) continue;
    int len = edge_length(d, e);
    if (len <= threshold) continue;
    Vertex other = e.first == v ? e.second : e.first;
    int cw = cw_distance(d, v, other);
    // +1 = within the first half clockwise ("left of the diameter through v"
    // in the clockwise slot layout); calibrated so that vertex 00...0 of H_d
    // gets all +1.
    longs.emplace_back(len, cw < d.n - cw ? +1 : -1);
  }
  std::sort(longs.rbegin(), longs.rend());
  for (size_t i = 1; i < longs.size(); ++i)
    if (longs[i].first == longs[i - 1].first)
      throw std::invalid_argument("tied edge lengths above threshold");
  std::vector<int> dirs;
  dirs.reserve(longs.size());
  for (auto& [len, dir] : longs) dirs.push_back(dir);
  return dirs;
}

long long crossing_formula(const std::vector<int>& profile, int n_vertices) {
  if (n_vertices % 2 != 0) throw std::invalid_argument("odd vertex count");
  for (size_t i = 1; i < profile.size(); ++i)
    if (profile[i] > profile[i - 1])
      throw std::invalid_argument("profile must be descending");
  long long s2 = 0;  // sum (l_i - 1)(2i - 1), twice the half-integer sum
  for (size_t i = 0; i < profile.size(); ++i)
    s2 += static_cast<long long>(profile[i] - 1) * (2 * (i + 1) - 1);
  long long scaled = static_cast<long long>(n_vertices) * s2;
  if (scaled % 4 != 0)
    throw std::domain_error("crossing formula is not integral for this profile");
  return scaled / 4;
}

bool weakly_isomorphic(const ConvexDrawing& a, const ConvexDrawing& b) {
  if (a.n != b.n || a.edges != b.edges)
    throw std::invalid_argument("drawings must share vertex and edge sets");
  const auto& es = a.edges;
  for (size_t i = 0; i < es.size(); ++i)
    for (size_t j = i + 1; j < es.size(); ++j)
      if (edges_cross(a, es[i], es[j]) != edges_cross(b, es[i], es[j]))
        return false;
  return true;
}

ConvexDrawing relabel(const ConvexDrawing& d, const CubeAutomorphism& g) {
  std::vector<Vertex> order(d.n);
  for (int s = 0; s < d.n; ++s) order[s] = g(d.vertex_at[s]);
  std::vector<Edge> edges;
  edges.reserve(d.edges.size());
  for (const Edge& e : d.edges) edges.push_back(make_edge(g(e.first), g(e.second)));
  return make_convex_drawing(order, edges);
}

std::optional<CubeAutomorphism> weakly_isomorphic_up_to_automorphism(
    const ConvexDrawing& a, const ConvexDrawing& b, int d) {
  long long target = count_crossings(b);
  for (const CubeAutomorphism& g : enumerate_automorphisms(d)) {
    ConvexDrawing ga = relabel(a, g);
    if (count_crossings(ga) != target) continue;
    if (weakly_isomorphic(ga, b)) return g;
  }
  return std::nullopt;
}

}  // namespace cubedraw

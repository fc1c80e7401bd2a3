#include "cubedraw/constructions.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace cubedraw {

namespace {

// slot(0x) = 2*slot(x), slot(1x) = 2*slot(x) + 2^(dim-1) - 1 (mod 2^dim).
ConvexDrawing build_recursive(int d, const std::array<int, 4>& base_slot) {
  if (d < 2 || d > 16) throw std::out_of_range("dimension must be in [2,16]");
  std::vector<int> pos(base_slot.begin(), base_slot.end());
  for (int dim = 3; dim <= d; ++dim) {
    int n = 1 << dim;
    std::vector<int> next(n);
    for (Vertex v = 0; v < n; ++v)
      next[v] = (2 * pos[v >> 1] + (v & 1) * (n / 2 - 1)) % n;
    pos = std::move(next);
  }
  std::vector<Vertex> order(1 << d);
  for (Vertex v = 0; v < (1 << d); ++v) order[pos[v]] = v;
  return make_convex_drawing(order, build_hypercube(d).edges);
}

}  // namespace

ConvexDrawing build_H(int d) {
  // 00 -> 0, 01 -> 1, 11 -> 2, 10 -> 3 (ids 0, 2, 3, 1).
  return build_recursive(d, {0, 3, 1, 2});
}

ConvexDrawing build_R(int d) {
  // 00 -> 0, 11 -> 1, 01 -> 2, 10 -> 3.
  return build_recursive(d, {0, 3, 2, 1});
}

ParallelConstruction build_H_parallel(int d) {
  if (d < 3 || d > 12) throw std::out_of_range("dimension must be in [3,12]");
  ConvexDrawing prev = build_H(2);
  ParallelConstruction out;
  for (int dim = 3; dim <= d; ++dim) {
    int n = prev.n;  // 2^(dim-1)
    int c = n / 2;
    std::vector<Vertex> order(2 * n);
    for (int i = 0; i < n; ++i) {
      order[2 * i] = 2 * prev.vertex_at[i];
      order[2 * i + 1] = 1 + 2 * prev.vertex_at[(i - c + n) % n];
    }
    std::vector<Edge> edges;
    edges.reserve(static_cast<size_t>(dim) * n);
    for (const Edge& e : prev.edges) {
      edges.push_back(make_edge(2 * e.first, 2 * e.second));      // v copies
      edges.push_back(make_edge(2 * e.first + 1, 2 * e.second + 1));  // u copies
    }
    out.parallel_pairs.clear();
    for (int i = 0; i < n; ++i)
      edges.push_back(make_edge(2 * prev.vertex_at[i], 2 * prev.vertex_at[i] + 1));
    for (int i = 0; i < c; ++i)
      out.parallel_pairs.emplace_back(
          make_edge(2 * prev.vertex_at[i], 2 * prev.vertex_at[i] + 1),
          make_edge(2 * prev.vertex_at[i + c], 2 * prev.vertex_at[i + c] + 1));
    prev = make_convex_drawing(order, edges);
  }
  if (prev.edges != build_hypercube(d).edges)
    throw std::runtime_error("doubling construction produced a non-Q_d edge set");
  out.drawing = std::move(prev);
  return out;
}

ConvexDrawing build_bipartite_split(int d) {
  if (d < 2) throw std::out_of_range("dimension must be >= 2");
  std::vector<Vertex> order;
  order.reserve(1 << d);
  for (int parity = 0; parity < 2; ++parity)
    for (Vertex v = 0; v < (1 << d); ++v)
      if (__builtin_popcount(static_cast<unsigned>(v)) % 2 == parity)
        order.push_back(v);
  return make_convex_drawing(order, build_hypercube(d).edges);
}

uint64_t claim_x(int k) {
  if (k < 1 || k > 62) throw std::out_of_range("k must be in [1,62]");
  uint64_t x = 0;  // x_1
  for (int i = 1; i < k; ++i)
    if (x == static_cast<uint64_t>(i) - 1) x += uint64_t{1} << i;
  return x;
}

MatchingConstruction construct_plane_matching(int d) {
  if (d < 3) throw std::out_of_range("dimension must be >= 3");
  ConvexDrawing h = build_H(d);
  int n = h.n;
  Vertex v0 = static_cast<Vertex>(claim_x(d - 2));
  Vertex w0 = v0 ^ (3 << (d - 2));  // suffix 11: antipode of v0

  auto side_edges = [&](Vertex anchor) {
    std::vector<Edge> m;
    for (int i = 1; i <= d - 2; ++i) {
      Vertex vi = h.vertex_at[(h.slot_of[anchor] + i) % n];
      Vertex far;
      if (i < d - 2) {
        far = vi ^ (1 << i);  // the unique edge of length 2^(d-1) - 2^i
      } else {
        // Two shortest edges tie in length; take the one on the +1 side.
        Vertex cand1 = vi ^ (1 << (d - 2));
        Vertex cand2 = vi ^ (1 << (d - 1));
        far = cw_distance(h, vi, cand1) < n / 2 ? cand1 : cand2;
      }
      m.push_back(make_edge(vi, far));
    }
    return m;
  };

  std::vector<Edge> matching = side_edges(v0);
  std::vector<Edge> mw = side_edges(w0);
  matching.insert(matching.end(), mw.begin(), mw.end());
  std::vector<Edge> subgraph = matching;
  subgraph.push_back(make_edge(v0, v0 ^ 1));
  subgraph.push_back(make_edge(w0, w0 ^ 1));

  DrawnGraph g = from_convex(h);
  MatchingConstruction out;
  out.matching.edges = matching;
  out.matching.kind = SubgraphKind::Matching;
  out.matching.size = static_cast<int>(matching.size());
  out.matching.verified = verify_plane(g, matching, SubgraphKind::Matching);
  out.subgraph.edges = subgraph;
  out.subgraph.kind = SubgraphKind::Subgraph;
  out.subgraph.size = static_cast<int>(subgraph.size());
  out.subgraph.verified = verify_plane(g, subgraph, SubgraphKind::Subgraph);
  return out;
}

PlaneSubgraphResult construct_long_plane_path(int d) {
  if (d < 4) throw std::out_of_range("dimension must be >= 4");
  ConvexDrawing h = build_H(d);
  DrawnGraph g = from_convex(h);

  // Start vertices whose length-rotation alternates sign; bits d-1, d free.
  std::vector<Vertex> starts;
  for (int phase = 0; phase < 2; ++phase) {
    Vertex base = 0;
    for (int i = 0; i < d - 2; ++i)
      if (i % 2 == phase) base |= 1 << i;
    for (int hi = 0; hi < 4; ++hi) starts.push_back(base | hi << (d - 2));
  }

  for (Vertex v0 : starts) {
    Vertex p = v0, q = v0 ^ 1;
    std::vector<Edge> mid = {make_edge(p, q)};
    for (int j = 1; j <= d - 3; ++j) {
      mid.push_back(make_edge(p, p ^ (1 << j)));
      mid.push_back(make_edge(q, q ^ (1 << j)));
      p ^= 1 << j;
      q ^= 1 << j;
    }
    // The two shortest-class closing edges; the proof wants the -1 direction,
    // but for even d the sign bookkeeping differs, so try all four endings.
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b) {
        std::vector<Edge> path = mid;
        path.push_back(make_edge(p, p ^ (1 << (d - 2 + a))));
        path.push_back(make_edge(q, q ^ (1 << (d - 2 + b))));
        if (verify_plane(g, path, SubgraphKind::Path)) {
          PlaneSubgraphResult r;
          r.edges = std::move(path);
          r.kind = SubgraphKind::Path;
          r.size = static_cast<int>(r.edges.size());
          r.verified = true;
          return r;
        }
      }
  }
  throw std::runtime_error("no sign choice yields a plane path (convention bug?)");
}

long long crmax_lower_bound(int d) {
  if (d < 2) throw std::out_of_range("dimension must be >= 2");
  long long dd = static_cast<long long>(d) * d;
  return (1LL << (d - 2)) * ((1LL << (d - 1)) * (dd - 2 * d + 3) - dd - 1);
}

}  // namespace cubedraw

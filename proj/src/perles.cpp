#include "cubedraw/perles.hpp"

#include <algorithm>
#include <stdexcept>

namespace cubedraw {

namespace {

// Rank of an incident edge in the clockwise sweep from v: 1 = immediately
// clockwise neighbor slot.
int sweep_rank(const ConvexDrawing& d, Vertex v, const Edge& e) {
  Vertex far = e.first == v ? e.second : e.first;
  return cw_distance(d, v, far);
}

std::optional<int> extreme_index(const ConvexDrawing& d, Vertex v,
                                 const std::vector<int>& live, Side side) {
  std::optional<int> best;
  int best_rank = 0;
  for (int e : live) {
    const Edge& ed = d.edges[e];
    if (ed.first != v && ed.second != v) continue;
    int rank = sweep_rank(d, v, ed);
    if (!best || (side == Side::Right ? rank < best_rank : rank > best_rank)) {
      best = e;
      best_rank = rank;
    }
  }
  return best;
}

}  // namespace

std::optional<Edge> extreme_edge(const ConvexDrawing& d, Vertex v,
                                 const std::vector<Edge>& live, Side side) {
  std::optional<Edge> best;
  int best_rank = 0;
  for (const Edge& e : live) {
    if (e.first != v && e.second != v) continue;
    int rank = sweep_rank(d, v, e);
    if (!best || (side == Side::Right ? rank < best_rank : rank > best_rank)) {
      best = e;
      best_rank = rank;
    }
  }
  return best;
}

PeelTrace peel(const ConvexDrawing& d, int k) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  PeelTrace trace;
  trace.stages = k;
  trace.removed_stage.assign(d.edges.size(), 0);
  std::vector<int> live(d.edges.size());
  for (size_t i = 0; i < live.size(); ++i) live[i] = static_cast<int>(i);

  for (int stage = 1; stage <= k; ++stage) {
    trace.live_before.push_back(live);
    Side side = stage_side(stage);
    std::vector<char> doomed(d.edges.size(), 0);
    // Simultaneous removal: pick all extreme edges first, then delete.
    for (int s = 0; s < d.n; ++s) {
      auto e = extreme_index(d, d.vertex_at[s], live, side);
      if (e) doomed[*e] = 1;
    }
    std::vector<int> next;
    next.reserve(live.size());
    for (int e : live) {
      if (doomed[e])
        trace.removed_stage[e] = stage;
      else
        next.push_back(e);
    }
    live = std::move(next);
  }
  return trace;
}

PlaneSubgraphResult perles_path(const ConvexDrawing& d) {
  DrawnGraph g = from_convex(d);
  PlaneSubgraphResult r;
  r.kind = SubgraphKind::Path;
  long long m = static_cast<long long>(d.edges.size());
  if (m == 0) throw std::invalid_argument("drawing has no edges");
  int k = static_cast<int>((m - 1) / d.n);
  if (k == 0) {
    r.edges = {d.edges.front()};
    r.size = 1;
    r.verified = verify_plane(g, r.edges, SubgraphKind::Path);
    return r;
  }

  PeelTrace trace = peel(d, k);
  int survivor = -1;
  for (size_t e = 0; e < d.edges.size(); ++e)
    if (trace.removed_stage[e] == 0) {
      survivor = static_cast<int>(e);  // edges are sorted, so lex smallest
      break;
    }
  if (survivor < 0)
    throw std::logic_error("no survivor although |E| > k*n");

  std::vector<int> path = {survivor};
  Vertex end_a = d.edges[survivor].first;
  Vertex end_b = d.edges[survivor].second;
  std::vector<char> on_path(d.n, 0);
  on_path[end_a] = on_path[end_b] = 1;

  for (int stage = k; stage >= 1; --stage) {
    Side side = stage_side(stage);
    const std::vector<int>& live = trace.live_before[stage - 1];
    for (Vertex* end : {&end_a, &end_b}) {
      auto e = extreme_index(d, *end, live, side);
      if (!e) throw std::logic_error("endpoint lost its edges during peeling");
      const Edge& ed = d.edges[*e];
      Vertex next = ed.first == *end ? ed.second : ed.first;
      if (on_path[next])
        throw std::logic_error("peel reconstruction revisits a vertex");
      path.push_back(*e);
      on_path[next] = 1;
      *end = next;
    }
  }

  for (int e : path) r.edges.push_back(d.edges[e]);
  std::sort(r.edges.begin(), r.edges.end());
  r.size = static_cast<int>(r.edges.size());
  r.verified = verify_plane(g, r.edges, SubgraphKind::Path);
  if (!r.verified)
    throw std::logic_error("peel reconstruction is not a plane path");
  return r;
}

}  // namespace cubedraw

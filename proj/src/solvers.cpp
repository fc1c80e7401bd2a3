#include "cubedraw/solvers.hpp"

#include <algorithm>
#include <bitset>
#include <chrono>
#include <map>
#include <numeric>
#include <stdexcept>

namespace cubedraw {

namespace {

constexpr int kMaxEdges = 512;
using Bits = std::bitset<kMaxEdges>;

using Clock = std::chrono::steady_clock;

struct Deadline {
  long long node_limit;
  Clock::time_point end;
  bool timed;
  long long nodes = 0;
  bool exceeded = false;

  explicit Deadline(const SolveBudget& b)
      : node_limit(b.node_limit), timed(b.time_limit_s >= 0) {
    if (timed)
      end = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                               std::chrono::duration<double>(b.time_limit_s));
  }

  // Check roughly every 4096 nodes to keep the clock off the hot path.
  bool tick() {
    ++nodes;
    if (exceeded) return false;
    if (node_limit >= 0 && nodes > node_limit) exceeded = true;
    if (timed && (nodes & 0xfff) == 0 && Clock::now() > end) exceeded = true;
    return !exceeded;
  }
};

std::vector<std::vector<int>> adjacency(const DrawnGraph& g) {
  std::vector<std::vector<int>> adj(g.num_vertices);
  for (size_t i = 0; i < g.edges.size(); ++i) {
    adj[g.edges[i].first].push_back(static_cast<int>(i));
    adj[g.edges[i].second].push_back(static_cast<int>(i));
  }
  return adj;
}

// Branch and bound for maximum independent set in a conflict graph over the
// drawing's edges. Vertices are pre-sorted by descending conflict degree.
struct MisSolver {
  int m;
  std::vector<Bits> conflict;  // in sorted index space
  std::vector<int> to_edge;    // sorted index -> original edge index
  Bits best;
  int best_size = 0;
  int stop_at;  // proven hint: stop once reached
  Deadline deadline;

  MisSolver(const DrawnGraph& g, bool matching_mode, std::optional<int> hint,
            const SolveBudget& budget)
      : m(static_cast<int>(g.edges.size())),
        stop_at(hint.value_or(m)),
        deadline(budget) {
    if (m > kMaxEdges) throw std::invalid_argument("too many edges for exact solver");
    std::vector<Bits> raw(m);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) {
        if (i == j) continue;
        bool conf = g.crosses[i][j];
        if (matching_mode) {
          const Edge& e = g.edges[i];
          const Edge& f = g.edges[j];
          conf = conf || e.first == f.first || e.first == f.second ||
                 e.second == f.first || e.second == f.second;
        }
        if (conf) raw[i].set(j);
      }
    to_edge.resize(m);
    std::iota(to_edge.begin(), to_edge.end(), 0);
    std::stable_sort(to_edge.begin(), to_edge.end(), [&](int a, int b) {
      return raw[a].count() > raw[b].count();
    });
    std::vector<int> inv(m);
    for (int i = 0; i < m; ++i) inv[to_edge[i]] = i;
    conflict.assign(m, Bits());
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        if (raw[to_edge[i]][j]) conflict[i].set(inv[j]);
  }

  // Greedy maximal independent set, used as the initial incumbent.
  void seed_greedy() {
    Bits cand;
    for (int i = 0; i < m; ++i) cand.set(i);
    Bits cur;
    int size = 0;
    // Least-conflicting first; indices are sorted by descending degree.
    for (int i = m - 1; i >= 0; --i) {
      if (!cand[i]) continue;
      cur.set(i);
      ++size;
      cand &= ~conflict[i];
      cand.reset(i);
    }
    best = cur;
    best_size = size;
  }

  // Greedy clique cover of the candidate set; its size bounds the independent
  // set achievable within `cand`.
  int bound(const Bits& cand) const {
    Bits left = cand;
    int cliques = 0;
    while (left.any()) {
      int v = first_set(left);
      left.reset(v);
      Bits common = conflict[v] & left;
      while (common.any()) {
        int u = first_set(common);
        left.reset(u);
        common &= conflict[u];
        common.reset(u);
      }
      ++cliques;
    }
    return cliques;
  }

  static int first_set(const Bits& b) {
    return static_cast<int>(b._Find_first());
  }

  void expand(Bits cand, Bits cur, int cur_size) {
    if (!deadline.tick()) return;
    if (cur_size > best_size) {
      best = cur;
      best_size = cur_size;
    }
    if (best_size >= stop_at) return;
    if (!cand.any()) return;
    if (cur_size + bound(cand) <= best_size) return;
    int v = first_set(cand);
    // Include v.
    Bits sub = cand & ~conflict[v];
    sub.reset(v);
    Bits with = cur;
    with.set(v);
    expand(sub, with, cur_size + 1);
    // Exclude v.
    cand.reset(v);
    if (cand.any()) expand(cand, cur, cur_size);
  }

  void run() {
    seed_greedy();
    if (best_size >= stop_at) return;
    Bits cand;
    for (int i = 0; i < m; ++i) cand.set(i);
    expand(cand, Bits(), 0);
  }
};

}  // namespace

int DrawnGraph::edge_index(const Edge& e) const {
  Edge key = make_edge(e.first, e.second);
  auto it = std::lower_bound(edges.begin(), edges.end(), key);
  if (it == edges.end() || *it != key) return -1;
  return static_cast<int>(it - edges.begin());
}

DrawnGraph from_convex(const ConvexDrawing& d) {
  DrawnGraph g;
  g.num_vertices = d.n;
  g.edges = d.edges;
  size_t m = g.edges.size();
  g.crosses.assign(m, std::vector<char>(m, 0));
  for (size_t i = 0; i < m; ++i)
    for (size_t j = i + 1; j < m; ++j)
      if (edges_cross(d, g.edges[i], g.edges[j]))
        g.crosses[i][j] = g.crosses[j][i] = 1;
  return g;
}

static PlaneSubgraphResult finish(const DrawnGraph& g, std::vector<Edge> edges,
                                  SubgraphKind kind, bool optimal) {
  PlaneSubgraphResult r;
  std::sort(edges.begin(), edges.end());
  r.edges = std::move(edges);
  r.kind = kind;
  r.size = static_cast<int>(r.edges.size());
  r.proven_optimal = optimal;
  r.verified = verify_plane(g, r.edges, kind);
  return r;
}

static PlaneSubgraphResult solve_mis(const DrawnGraph& g, bool matching_mode,
                                     std::optional<int> hint,
                                     const SolveBudget& budget) {
  MisSolver solver(g, matching_mode, hint, budget);
  solver.run();
  std::vector<Edge> edges;
  for (int i = 0; i < solver.m; ++i)
    if (solver.best[i]) edges.push_back(g.edges[solver.to_edge[i]]);
  bool optimal = !solver.deadline.exceeded || solver.best_size >= solver.stop_at;
  return finish(g, std::move(edges),
                matching_mode ? SubgraphKind::Matching : SubgraphKind::Subgraph,
                optimal);
}

PlaneSubgraphResult max_plane_subgraph(const DrawnGraph& g,
                                       std::optional<int> upper_hint,
                                       const SolveBudget& budget) {
  return solve_mis(g, false, upper_hint, budget);
}

PlaneSubgraphResult max_plane_matching(const DrawnGraph& g,
                                       const SolveBudget& budget) {
  return solve_mis(g, true, std::nullopt, budget);
}

namespace {

struct PathSolver {
  const DrawnGraph& g;
  std::vector<std::vector<int>> adj;
  std::vector<char> on_path;
  std::vector<int> path_edges;
  Bits blocked;  // edges crossing some path edge
  std::vector<int> best_edges;
  Deadline deadline;

  PathSolver(const DrawnGraph& gg, const SolveBudget& budget)
      : g(gg), adj(adjacency(gg)), on_path(gg.num_vertices, 0), deadline(budget) {}

  Bits cross_row(int e) const {
    Bits b;
    for (size_t j = 0; j < g.edges.size(); ++j)
      if (g.crosses[e][j]) b.set(j);
    return b;
  }

  void extend(int tail) {
    if (!deadline.tick()) return;
    if (path_edges.size() > best_edges.size()) best_edges = path_edges;
    for (int e : adj[tail]) {
      if (blocked[e]) continue;
      const Edge& ed = g.edges[e];
      int next = ed.first == tail ? ed.second : ed.first;
      if (on_path[next]) continue;
      on_path[next] = 1;
      path_edges.push_back(e);
      Bits saved = blocked;
      blocked |= cross_rows[e];
      blocked.set(e);
      extend(next);
      blocked = saved;
      path_edges.pop_back();
      on_path[next] = 0;
    }
  }

  std::vector<Bits> cross_rows;

  void run() {
    cross_rows.resize(g.edges.size());
    for (size_t e = 0; e < g.edges.size(); ++e) cross_rows[e] = cross_row(e);
    for (int v = 0; v < g.num_vertices; ++v) {
      on_path[v] = 1;
      extend(v);
      on_path[v] = 0;
    }
  }
};

}  // namespace

PlaneSubgraphResult longest_plane_path(const DrawnGraph& g,
                                       const SolveBudget& budget) {
  if (g.edges.size() > kMaxEdges)
    throw std::invalid_argument("too many edges for exact solver");
  PathSolver solver(g, budget);
  solver.run();
  std::vector<Edge> edges;
  for (int e : solver.best_edges) edges.push_back(g.edges[e]);
  return finish(g, std::move(edges), SubgraphKind::Path,
                !solver.deadline.exceeded);
}

namespace {

struct CycleSolver {
  const DrawnGraph& g;
  std::vector<std::vector<int>> adj;
  std::vector<char> on_path;
  std::vector<int> path_vertices;
  std::vector<int> path_edges;
  Bits blocked;
  std::vector<Bits> cross_rows;
  int max_len;
  Deadline deadline;
  std::optional<std::vector<int>> found;

  CycleSolver(const DrawnGraph& gg, int ml, const SolveBudget& budget)
      : g(gg), adj(adjacency(gg)), on_path(gg.num_vertices, 0), max_len(ml),
        deadline(budget) {
    cross_rows.resize(g.edges.size());
    for (size_t e = 0; e < g.edges.size(); ++e) {
      for (size_t j = 0; j < g.edges.size(); ++j)
        if (g.crosses[e][j]) cross_rows[e].set(j);
    }
  }

  void dfs(int start, int tail) {
    if (found || !deadline.tick()) return;
    for (int e : adj[tail]) {
      if (blocked[e]) continue;
      const Edge& ed = g.edges[e];
      int next = ed.first == tail ? ed.second : ed.first;
      if (next == start && path_edges.size() >= 2) {
        // Avoid reporting each cycle twice.
        if (path_vertices[1] < path_vertices.back()) {
          found = path_edges;
          found->push_back(e);
        }
        continue;
      }
      if (on_path[next] || static_cast<int>(path_edges.size()) + 1 >= max_len)
        continue;
      // Cycles through `start` only, with start minimal: dedupes rotations.
      if (next < start) continue;
      on_path[next] = 1;
      path_vertices.push_back(next);
      path_edges.push_back(e);
      Bits saved = blocked;
      blocked |= cross_rows[e];
      blocked.set(e);
      dfs(start, next);
      blocked = saved;
      path_edges.pop_back();
      path_vertices.pop_back();
      on_path[next] = 0;
      if (found) return;
    }
  }

  void run() {
    for (int s = 0; s < g.num_vertices && !found; ++s) {
      on_path[s] = 1;
      path_vertices = {s};
      dfs(s, s);
      on_path[s] = 0;
    }
  }
};

}  // namespace

CycleSearchResult find_plane_cycle(const DrawnGraph& g,
                                   std::optional<int> max_len,
                                   const SolveBudget& budget) {
  if (g.edges.size() > kMaxEdges)
    throw std::invalid_argument("too many edges for exact solver");
  CycleSolver solver(g, max_len.value_or(static_cast<int>(g.edges.size())),
                     budget);
  solver.run();
  CycleSearchResult out;
  out.exhausted = !solver.deadline.exceeded;
  if (solver.found) {
    std::vector<Edge> edges;
    for (int e : *solver.found) edges.push_back(g.edges[e]);
    out.cycle = finish(g, std::move(edges), SubgraphKind::Cycle, out.exhausted);
  }
  return out;
}

bool contains_plane_G0(const DrawnGraph& g) {
  auto adj = adjacency(g);
  int n = g.num_vertices;
  auto other = [&](int e, int v) {
    return g.edges[e].first == v ? g.edges[e].second : g.edges[e].first;
  };
  auto compatible = [&](const std::vector<int>& es) {
    for (size_t i = 0; i < es.size(); ++i)
      for (size_t j = i + 1; j < es.size(); ++j)
        if (g.crosses[es[i]][es[j]]) return false;
    return true;
  };
  for (int c = 0; c < n; ++c) {
    const auto& inc = adj[c];
    int deg = static_cast<int>(inc.size());
    for (int a = 0; a < deg; ++a)
      for (int b = a + 1; b < deg; ++b)
        for (int cc = b + 1; cc < deg; ++cc) {
          int mids[3] = {other(inc[a], c), other(inc[b], c), other(inc[cc], c)};
          int spokes[3] = {inc[a], inc[b], inc[cc]};
          // Pick a leaf behind each middle vertex.
          for (int la : adj[mids[0]])
            for (int lb : adj[mids[1]])
              for (int lc : adj[mids[2]]) {
                int leaves[3] = {other(la, mids[0]), other(lb, mids[1]),
                                 other(lc, mids[2])};
                bool distinct = true;
                int used[7] = {c, mids[0], mids[1], mids[2], leaves[0],
                               leaves[1], leaves[2]};
                for (int i = 0; i < 7 && distinct; ++i)
                  for (int j = i + 1; j < 7; ++j)
                    if (used[i] == used[j]) { distinct = false; break; }
                if (!distinct) continue;
                std::vector<int> es = {spokes[0], spokes[1], spokes[2],
                                       la, lb, lc};
                if (compatible(es)) return true;
              }
        }
  }
  return false;
}

bool verify_plane(const DrawnGraph& g, const std::vector<Edge>& edges,
                  SubgraphKind kind) {
  std::vector<int> idx;
  idx.reserve(edges.size());
  for (const Edge& e : edges) {
    int i = g.edge_index(e);
    if (i < 0) throw std::invalid_argument("edge not in drawing");
    idx.push_back(i);
  }
  std::vector<int> dedup = idx;
  std::sort(dedup.begin(), dedup.end());
  if (std::adjacent_find(dedup.begin(), dedup.end()) != dedup.end())
    return false;
  for (size_t i = 0; i < idx.size(); ++i)
    for (size_t j = i + 1; j < idx.size(); ++j)
      if (g.crosses[idx[i]][idx[j]]) return false;

  if (kind == SubgraphKind::Subgraph) return true;

  std::map<int, int> degree;
  for (int i : idx) {
    ++degree[g.edges[i].first];
    ++degree[g.edges[i].second];
  }
  if (kind == SubgraphKind::Matching) {
    for (auto& [v, deg] : degree)
      if (deg > 1) return false;
    return true;
  }

  // Path or cycle: connected with the right degree sequence.
  if (idx.empty()) return false;
  size_t nv = degree.size();
  if (kind == SubgraphKind::Path) {
    int leaves = 0;
    for (auto& [v, deg] : degree) {
      if (deg > 2) return false;
      if (deg == 1) ++leaves;
    }
    if (leaves != 2 || idx.size() != nv - 1) return false;
  } else {  // Cycle
    for (auto& [v, deg] : degree)
      if (deg != 2) return false;
    if (idx.size() != nv) return false;
  }
  // Connectivity over the used vertices.
  std::map<int, std::vector<int>> nbr;
  for (int i : idx) {
    nbr[g.edges[i].first].push_back(g.edges[i].second);
    nbr[g.edges[i].second].push_back(g.edges[i].first);
  }
  std::vector<int> stack = {degree.begin()->first};
  std::map<int, char> seen;
  seen[stack[0]] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : nbr[v])
      if (!seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
  }
  return seen.size() == nv;
}

}  // namespace cubedraw

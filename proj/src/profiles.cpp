#include "cubedraw/profiles.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "cubedraw/hypercube.hpp"

namespace cubedraw {

std::optional<std::string> necessary_filters(const AscProfile& profile, int d) {
  if (d < 2) throw std::invalid_argument("dimension must be >= 2");
  if (static_cast<int>(profile.size()) != d)
    throw std::invalid_argument("profile must have d entries");
  int half = 1 << (d - 1);
  for (size_t i = 0; i < profile.size(); ++i) {
    if (profile[i] < 1 || profile[i] > half)
      throw std::invalid_argument("profile entry out of [1, 2^(d-1)]");
    if (i > 0 && profile[i] < profile[i - 1])
      throw std::invalid_argument("profile must be ascending");
  }

  bool has_odd = false, has_even = false;
  std::map<int, int> count;
  for (int l : profile) {
    (l % 2 ? has_odd : has_even) = true;
    ++count[l];
  }
  if (!has_odd) return "no odd length";
  for (auto [l, c] : count) {
    if (c < 2) continue;
    if (l % 2 && has_even) return "odd length repeated alongside an even length";
    for (int m : profile)
      if (m % l == 0 && (m / l) % 2 == 0)
        return "even multiple of a repeated length";
  }
  return std::nullopt;
}

namespace {

struct Searcher {
  int d, n, half;
  long long budget;
  bool reverse;
  std::vector<int> slot_vertex;  // slot -> vertex, -1 open
  std::vector<int> vertex_slot;  // vertex -> slot, -1 unplaced
  std::vector<std::vector<int>> residual;  // [vertex][length] still needed
  long long nodes = 0;
  bool exceeded = false;
  std::optional<std::vector<Vertex>> found;

  Searcher(const AscProfile& profile, int dd, const RealizeOptions& opt)
      : d(dd), n(1 << dd), half(1 << (dd - 1)), budget(opt.node_budget),
        reverse(opt.reverse_candidates) {
    slot_vertex.assign(n, -1);
    vertex_slot.assign(n, -1);
    std::vector<int> base(half + 1, 0);
    for (int l : profile) ++base[l];
    residual.assign(n, base);
  }

  // n chords of each length < n/2 exist, n/2 of length n/2; a profile needing
  // more is impossible outright.
  bool chord_supply_ok() const {
    for (int l = 1; l <= half; ++l) {
      long long needed = static_cast<long long>(n) * residual[0][l] / 2;
      if (needed > (l == half ? n / 2 : n)) return false;
    }
    return true;
  }

  int dist(int s, int t) const {
    int diff = std::abs(s - t);
    return std::min(diff, n - diff);
  }

  // Free slots (all are > s, since slots fill in order) at distance l from t.
  int free_slots_at(int t, int l, int s) const {
    int a = (t + l) % n, b = (t - l + n) % n;
    int free = (a > s) + (l != half && b > s);
    return free;
  }

  bool feasible_after(int s) const {
    for (int u = 0; u < n; ++u) {
      if (vertex_slot[u] < 0) continue;
      for (int l = 1; l <= half; ++l)
        if (residual[u][l] > free_slots_at(vertex_slot[u], l, s))
          return false;
    }
    return true;
  }

  bool place(int v, int s, int& undo) {
    undo = 0;
    for (int i = 0; i < d; ++i) {
      int u = v ^ (1 << i);
      int t = vertex_slot[u];
      if (t < 0) continue;
      int l = dist(s, t);
      if (residual[v][l] == 0 || residual[u][l] == 0) {
        unplace(v, s, undo);
        return false;
      }
      --residual[v][l];
      --residual[u][l];
      undo |= 1 << i;
    }
    return true;
  }

  void unplace(int v, int s, int undo) {
    for (int i = 0; i < d; ++i) {
      if (!(undo >> i & 1)) continue;
      int u = v ^ (1 << i);
      int l = dist(s, vertex_slot[u]);
      ++residual[v][l];
      ++residual[u][l];
    }
  }

  void dfs(int s) {
    if (found || exceeded) return;
    if (s == n) {
      found = slot_vertex;
      return;
    }
    for (int k = 0; k < n; ++k) {
      int v = reverse ? n - 1 - k : k;
      if (vertex_slot[v] >= 0) continue;
      // Symmetry: slot 1 only takes the minimum of its permutation orbit, and
      // reflection is broken by comparing the popcounts beside slot 0.
      if (s == 1 && v != (1 << __builtin_popcount(static_cast<unsigned>(v))) - 1)
        continue;
      if (s == n - 1 &&
          __builtin_popcount(static_cast<unsigned>(slot_vertex[1])) >
              __builtin_popcount(static_cast<unsigned>(v)))
        continue;
      if (++nodes > budget) {
        exceeded = true;
        return;
      }
      int undo;
      if (!place(v, s, undo)) continue;
      vertex_slot[v] = s;
      slot_vertex[s] = v;
      if (feasible_after(s)) dfs(s + 1);
      slot_vertex[s] = -1;
      vertex_slot[v] = -1;
      unplace(v, s, undo);
      if (found || exceeded) return;
    }
  }

  void run() {
    if (!chord_supply_ok()) return;
    vertex_slot[0] = 0;
    slot_vertex[0] = 0;
    dfs(1);
  }
};

}  // namespace

ProfileCandidate realize_profile(const AscProfile& profile, int d,
                                 const RealizeOptions& opt) {
  if (d > 4) throw std::invalid_argument("realization search capped at d = 4");
  ProfileCandidate out;
  out.profile = profile;
  Searcher s(profile, d, opt);
  s.run();
  out.nodes = s.nodes;
  if (s.found) {
    out.status = ProfileStatus::Realizable;
    ConvexDrawing w = make_convex_drawing(*s.found, build_hypercube(d).edges);
    auto prof = length_profile(w);
    AscProfile got = prof.profile.value_or(AscProfile{});
    std::sort(got.begin(), got.end());
    if (got != profile)
      throw std::logic_error("witness does not have the requested profile");
    out.witness = std::move(w);
  } else {
    out.status =
        s.exceeded ? ProfileStatus::BudgetExceeded : ProfileStatus::ProvenNone;
  }
  return out;
}

namespace {

void all_ascending(int d, int max_len, AscProfile& cur,
                   std::vector<AscProfile>& out) {
  if (static_cast<int>(cur.size()) == d) {
    out.push_back(cur);
    return;
  }
  for (int l = cur.empty() ? 1 : cur.back(); l <= max_len; ++l) {
    cur.push_back(l);
    all_ascending(d, max_len, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<ProfileCandidate> enumerate_profiles(int d,
                                                 const EnumerateOptions& opt) {
  std::vector<AscProfile> tuples;
  AscProfile cur;
  all_ascending(d, 1 << (d - 1), cur, tuples);

  RealizeOptions ropt;
  ropt.node_budget = opt.node_budget;
  ropt.reverse_candidates = opt.reverse_candidates;

  std::vector<ProfileCandidate> out;
  out.reserve(tuples.size());
  for (const AscProfile& p : tuples) {
    auto reason = necessary_filters(p, d);
    if (!reason) {
      out.push_back(realize_profile(p, d, ropt));
      continue;
    }
    ProfileCandidate c;
    c.profile = p;
    c.filter_reason = *reason;
    c.status = ProfileStatus::FilteredOut;
    if (opt.audit_filtered) {
      ProfileCandidate searched = realize_profile(p, d, ropt);
      c.nodes = searched.nodes;
      if (searched.status != ProfileStatus::ProvenNone) {
        // A realizable (or undecided) filtered profile must stay visible.
        c.status = searched.status;
        c.witness = std::move(searched.witness);
      }
    }
    out.push_back(std::move(c));
  }
  return out;
}

ConjectureReport check_conjectures(const std::vector<ProfileCandidate>& results,
                                   int d) {
  ConjectureReport rep;
  for (const ProfileCandidate& c : results) {
    if (c.status != ProfileStatus::Realizable) continue;
    const AscProfile& p = c.profile;
    for (int i = 0; i < d; ++i) {
      int exp = d - (i + 2);
      if (exp < 0) break;
      if (p[i] > (1 << (d - 1)) - (1 << exp)) {
        rep.bound_violations.push_back(p);
        break;
      }
    }
    // The parity conjectures are only claimed from d = 4 up; at d = 3 both
    // all-odd and repeated-odd profiles are actually realizable.
    if (d < 4) continue;
    if (std::none_of(p.begin(), p.end(), [](int l) { return l % 2 == 0; }))
      rep.all_odd_profiles.push_back(p);
    for (size_t i = 0; i + 1 < p.size(); ++i)
      if (p[i] == p[i + 1] && p[i] % 2 == 1) {
        rep.repeated_odd_profiles.push_back(p);
        break;
      }
  }
  return rep;
}

const std::vector<AscProfile>& known_profiles_d4() {
  static const std::vector<AscProfile> list = {
      {1, 2, 2, 6}, {1, 2, 3, 5}, {1, 2, 3, 7}, {1, 2, 4, 4}, {1, 2, 4, 6},
      {1, 2, 4, 7}, {1, 2, 4, 8}, {1, 2, 5, 7}, {1, 2, 6, 6}, {1, 3, 5, 6},
      {1, 3, 6, 7}, {1, 4, 4, 6}, {1, 4, 6, 8}, {1, 5, 6, 7}, {2, 2, 5, 6},
      {2, 3, 4, 4}, {2, 3, 4, 5}, {2, 3, 4, 8}, {2, 3, 6, 7}, {2, 4, 4, 5},
      {2, 4, 4, 7}, {2, 4, 5, 8}, {2, 4, 6, 7}, {2, 4, 7, 8}, {2, 5, 6, 6},
      {3, 4, 4, 6}, {3, 4, 6, 8}, {4, 4, 5, 6}, {4, 4, 6, 7}, {4, 5, 6, 8},
      {4, 6, 7, 8}};
  return list;
}

}  // namespace cubedraw

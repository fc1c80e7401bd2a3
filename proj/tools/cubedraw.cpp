#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "cubedraw/constructions.hpp"
#include "cubedraw/json_io.hpp"
#include "cubedraw/perles.hpp"
#include "cubedraw/profiles.hpp"
#include "cubedraw/svg.hpp"

using namespace cubedraw;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

void write_output(const std::string& out_path, const std::string& content) {
  if (out_path.empty() || out_path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream f(out_path);
  if (!f) throw std::runtime_error("cannot open output file: " + out_path);
  f << content;
}

DrawingDocument read_document(const std::string& path) {
  json j;
  if (path.empty() || path == "-") {
    std::cin >> j;
  } else {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open input file: " + path);
    f >> j;
  }
  return parse_document(j);
}

int run_gen(const std::string& kind, int d, uint64_t seed,
            const std::string& out) {
  DrawingDocument doc;
  if (kind == "hd") {
    doc = document_from(build_H(d), d);
  } else if (kind == "rd") {
    doc = document_from(build_R(d), d);
  } else if (kind == "hparallel") {
    doc = document_from(build_H_parallel(d).drawing, d);
  } else if (kind == "bipartite") {
    doc = document_from(build_bipartite_split(d), d);
  } else if (kind == "random-convex") {
    HypercubeGraph g = build_hypercube(d);
    std::vector<Vertex> order(g.num_vertices());
    std::iota(order.begin(), order.end(), 0);
    std::mt19937_64 rng(seed);
    std::shuffle(order.begin(), order.end(), rng);
    doc = document_from(make_convex_drawing(order, g.edges), d);
    doc.metadata["seed"] = std::to_string(seed);
  } else if (kind == "random-rect") {
    doc = document_from(random_rectilinear(build_hypercube(d), seed), d);
    doc.metadata["seed"] = std::to_string(seed);
  } else {
    std::cerr << "unknown kind: " << kind << "\n";
    return kExitUsage;
  }
  write_output(out, to_json(doc).dump(2) + "\n");
  return kExitOk;
}

int run_stats(const std::string& input, const std::string& format,
              const std::string& out) {
  DrawingDocument doc = read_document(input);
  json rep;
  rep["kind"] = doc.kind;
  DrawnGraph g = document_graph(doc);
  rep["num_vertices"] = g.num_vertices;
  rep["num_edges"] = g.edges.size();
  long long crossings = 0;
  for (size_t i = 0; i < g.edges.size(); ++i)
    for (size_t j = i + 1; j < g.edges.size(); ++j)
      if (g.crosses[i][j]) ++crossings;
  rep["crossings"] = crossings;

  if (doc.convex) {
    auto prof = length_profile(*doc.convex);
    if (prof.profile) {
      rep["length_regular"] = true;
      rep["length_profile"] = *prof.profile;
    } else {
      rep["length_regular"] = false;
      rep["irregularity_witnesses"] = {prof.witness_a, prof.witness_b};
    }
    if (doc.d && prof.profile) {
      // Rotation histogram over the edges above the shortest-length class.
      int threshold = (*prof.profile)[0] == 1 << (*doc.d - 1)
                          ? 0
                          : (1 << (*doc.d - 1)) - (1 << (*doc.d - 2));
      try {
        std::map<std::vector<int>, int> hist;
        for (Vertex v = 0; v < doc.convex->n; ++v)
          ++hist[length_rotation(*doc.convex, v, threshold)];
        json h = json::array();
        for (const auto& [vec, cnt] : hist)
          h.push_back({{"rotation", vec}, {"count", cnt}});
        rep["rotation_histogram"] = h;
      } catch (const std::exception&) {
        // Not an H_d-shaped drawing; no histogram.
      }
    }
  }

  if (format == "json") {
    write_output(out, rep.dump(2) + "\n");
  } else {
    std::ostringstream s;
    s << "kind:       " << doc.kind << "\n"
      << "vertices:   " << g.num_vertices << "\n"
      << "edges:      " << g.edges.size() << "\n"
      << "crossings:  " << crossings << "\n";
    if (rep.contains("length_regular")) {
      if (rep["length_regular"].get<bool>()) {
        s << "profile:    ";
        for (int l : rep["length_profile"]) s << l << " ";
        s << "\n";
      } else {
        s << "profile:    not length-regular (vertices "
          << rep["irregularity_witnesses"][0] << ", "
          << rep["irregularity_witnesses"][1] << " disagree)\n";
      }
    }
    if (rep.contains("rotation_histogram")) {
      s << "rotations:\n";
      for (const auto& h : rep["rotation_histogram"]) {
        s << "  (";
        for (int x : h["rotation"]) s << (x > 0 ? "+1 " : "-1 ");
        s << ") x " << h["count"].get<int>() << "\n";
      }
    }
    write_output(out, s.str());
  }
  return kExitOk;
}

int run_solve(const std::string& input, const std::string& what,
              const std::string& mode, double time_limit,
              const std::string& out) {
  DrawingDocument doc = read_document(input);
  PlaneSubgraphResult r;
  if (mode == "exact") {
    SolveBudget budget;
    budget.time_limit_s = time_limit;
    DrawnGraph g = document_graph(doc);
    if (what == "path")
      r = longest_plane_path(g, budget);
    else if (what == "matching")
      r = max_plane_matching(g, budget);
    else
      r = max_plane_subgraph(g, {}, budget);
  } else if (mode == "perles") {
    if (!doc.convex) throw std::runtime_error("perles mode needs a convex document");
    if (what != "path") throw std::runtime_error("perles mode only solves paths");
    r = perles_path(*doc.convex);
    r.proven_optimal = false;  // a guarantee, not an optimum
  } else if (mode == "construct") {
    if (!doc.d) throw std::runtime_error("construct mode needs a dimension tag");
    if (what == "path")
      r = construct_long_plane_path(*doc.d);
    else if (what == "matching")
      r = construct_plane_matching(*doc.d).matching;
    else
      r = construct_plane_matching(*doc.d).subgraph;
    r.proven_optimal = false;
  } else {
    std::cerr << "unknown mode: " << mode << "\n";
    return kExitUsage;
  }
  write_output(out, result_json(r).dump(2) + "\n");
  if (!r.verified) return kExitVerifyFail;
  if (mode == "exact" && !r.proven_optimal) return kExitBudget;
  return kExitOk;
}

struct Checker {
  bool ok = true;
  bool budget_exceeded = false;

  void check(bool pass, const std::string& name) {
    std::cout << (pass ? "[pass] " : "[FAIL] ") << name << "\n";
    ok = ok && pass;
  }
};

void suite_constructions(Checker& c, int dmax) {
  std::vector<Vertex> h3;
  for (const char* s : {"000", "110", "001", "100", "011", "101", "010", "111"})
    h3.push_back(parse_label(s));
  c.check(build_H(3).vertex_at == h3, "H_3 circular order");
  for (int d = 2; d <= dmax; ++d) {
    std::vector<int> want_h, want_r;
    want_r.push_back(1 << (d - 1));
    for (int i = 1; i < d; ++i) {
      want_h.push_back((1 << (d - 1)) - (1 << (i - 1)));
      want_r.push_back((1 << (d - 1)) - (1 << (i - 1)));
    }
    want_h.push_back((1 << (d - 1)) - (1 << (d - 2)));
    std::sort(want_h.rbegin(), want_h.rend());
    std::sort(want_r.rbegin(), want_r.rend());
    c.check(length_profile(build_H(d)).profile == want_h,
            "H_" + std::to_string(d) + " length profile");
    c.check(length_profile(build_R(d)).profile == want_r,
            "R_" + std::to_string(d) + " length profile");
  }
  for (int d = 3; d <= dmax; ++d) {
    auto m = construct_plane_matching(d);
    c.check(m.matching.verified && m.matching.size == 2 * d - 4 &&
                m.subgraph.verified && m.subgraph.size == 2 * d - 2,
            "plane matching/subgraph sizes, d=" + std::to_string(d));
  }
  for (int d = 4; d <= dmax; ++d) {
    auto p = construct_long_plane_path(d);
    c.check(p.verified && p.size == 2 * d - 3,
            "plane path of length 2d-3, d=" + std::to_string(d));
  }
  bool xs = true;
  for (int k = 1; k <= 20; ++k) {
    uint64_t x = claim_x(k);
    for (int i = 0; i < k; ++i)
      if ((x - i) >> i & 1) xs = false;
  }
  c.check(xs, "claim x_k bit condition, k=1..20");
}

void suite_bounds(Checker& c, int dmax) {
  c.check(max_plane_subgraph(from_convex(build_H(3))).size == 4,
          "max plane subgraph H_3 = 4");
  for (int d = 4; d <= std::min(dmax, 5); ++d) {
    DrawnGraph g = from_convex(build_H(d));
    auto sub = max_plane_subgraph(g);
    auto path = longest_plane_path(g);
    auto mat = max_plane_matching(g);
    c.check(sub.proven_optimal && sub.size == 2 * d - 2,
            "max plane subgraph H_" + std::to_string(d));
    c.check(path.proven_optimal && path.size == 2 * d - 3,
            "longest plane path H_" + std::to_string(d));
    c.check(mat.proven_optimal && mat.size == 2 * d - 4,
            "max plane matching H_" + std::to_string(d));
  }
}

void suite_crossings(Checker& c, int dmax) {
  for (int d = 2; d <= dmax; ++d) {
    ConvexDrawing h = build_H(d), r = build_R(d);
    long long ch = count_crossings(h), cr = count_crossings(r);
    c.check(cr == crmax_lower_bound(d),
            "R_" + std::to_string(d) + " crossings = closed form");
    c.check(ch == crossing_formula(*length_profile(h).profile, h.n),
            "H_" + std::to_string(d) + " crossings = formula");
    c.check(cr == crossing_formula(*length_profile(r).profile, r.n),
            "R_" + std::to_string(d) + " crossings = formula");
  }
}

void suite_profiles(Checker& c) {
  auto results = enumerate_profiles(4);
  std::vector<AscProfile> realizable;
  bool budget = false;
  for (const auto& r : results) {
    if (r.status == ProfileStatus::Realizable) realizable.push_back(r.profile);
    if (r.status == ProfileStatus::BudgetExceeded) budget = true;
  }
  c.budget_exceeded = c.budget_exceeded || budget;
  c.check(!budget, "d=4 search within node budget");
  bool all_known = true;
  for (const auto& p : known_profiles_d4())
    if (std::find(realizable.begin(), realizable.end(), p) == realizable.end())
      all_known = false;
  c.check(all_known, "all 31 known d=4 profiles realizable");
  for (const auto& p : realizable)
    if (std::find(known_profiles_d4().begin(), known_profiles_d4().end(), p) ==
        known_profiles_d4().end())
      std::cout << "[note] new realizable profile: " << json(p).dump() << "\n";
  c.check(check_conjectures(results, 4).consistent(),
          "conjectures consistent at d=4");
}

void suite_nonconvex(Checker& c, int samples) {
  auto rep = validate_figure7(figure7_drawing());
  c.check(rep.all_ok(), "bundled Q_3 counterexample drawing valid");
  HypercubeGraph q3 = build_hypercube(3);
  bool all_ge4 = true;
  for (int seed = 1; seed <= samples; ++seed) {
    DrawnGraph g = from_rectilinear(random_rectilinear(q3, seed));
    if (longest_plane_path(g).size < 4) all_ge4 = false;
  }
  c.check(all_ge4, "random rectilinear Q_3: plane path >= 4 (" +
                       std::to_string(samples) + " seeds)");
}

int run_verify(const std::string& suite, int dmax) {
  Checker c;
  if (suite == "constructions" || suite == "all")
    suite_constructions(c, dmax > 0 ? dmax : 6);
  if (suite == "bounds" || suite == "all")
    suite_bounds(c, dmax > 0 ? dmax : 4);
  if (suite == "crossings" || suite == "all")
    suite_crossings(c, dmax > 0 ? dmax : 6);
  if (suite == "profiles" || suite == "all") suite_profiles(c);
  if (suite == "nonconvex" || suite == "all") suite_nonconvex(c, 100);
  if (c.budget_exceeded) return kExitBudget;
  return c.ok ? kExitOk : kExitVerifyFail;
}

int run_export_svg(const std::string& input, const std::string& out,
                   const std::string& highlight_path) {
  DrawingDocument doc = read_document(input);
  std::vector<Edge> highlight;
  if (!highlight_path.empty()) {
    std::ifstream f(highlight_path);
    if (!f) throw std::runtime_error("cannot open highlight file");
    json j;
    f >> j;
    for (const auto& e : j.at("edges"))
      highlight.push_back(make_edge(e.at(0).get<int>(), e.at(1).get<int>()));
  }
  write_output(out, export_svg(doc, highlight));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Convex-geometric hypercube drawing toolkit"};
  app.require_subcommand(1);

  std::string kind, input = "-", what = "subgraph", mode = "exact";
  std::string out, format = "text", suite = "all", highlight;
  int d = 3, dmax = 0, threads = 1;
  uint64_t seed = 0;
  double time_limit = -1.0;

  auto* gen = app.add_subcommand("gen", "Construct a drawing document");
  gen->add_option("kind", kind,
                  "hd|rd|hparallel|bipartite|random-convex|random-rect")
      ->required();
  gen->add_option("d", d, "hypercube dimension")->required();
  gen->add_option("--seed", seed, "RNG seed for random kinds");
  gen->add_option("--out", out, "output file (default stdout)");

  auto* stats = app.add_subcommand("stats", "Report drawing statistics");
  stats->add_option("input", input, "document file or - for stdin");
  stats->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));
  stats->add_option("--out", out, "output file (default stdout)");

  auto* solve = app.add_subcommand("solve", "Find a plane substructure");
  solve->add_option("what", what)->check(CLI::IsMember({"path", "matching", "subgraph"}));
  solve->add_option("input", input, "document file or - for stdin");
  solve->add_option("--mode", mode)->check(CLI::IsMember({"exact", "perles", "construct"}));
  solve->add_option("--time-limit", time_limit, "seconds, exact mode");
  solve->add_option("--threads", threads, "solver workers (exact mode)");
  solve->add_option("--out", out, "output file (default stdout)");

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", suite)
      ->check(CLI::IsMember({"all", "constructions", "bounds", "crossings",
                             "profiles", "nonconvex"}));
  verify->add_option("--dmax", dmax, "dimension ceiling (0 = suite default)");

  auto* svg = app.add_subcommand("export-svg", "Render a document as SVG");
  svg->add_option("input", input, "document file or - for stdin");
  svg->add_option("--out", out, "output SVG file")->required();
  svg->add_option("--highlight", highlight, "result JSON whose edges are highlighted");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (gen->parsed()) return run_gen(kind, d, seed, out);
    if (stats->parsed()) return run_stats(input, format, out);
    if (solve->parsed()) return run_solve(input, what, mode, time_limit, out);
    if (verify->parsed()) return run_verify(suite, dmax);
    if (svg->parsed()) return run_export_svg(input, out, highlight);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

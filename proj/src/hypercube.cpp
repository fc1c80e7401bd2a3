#include "cubedraw/hypercube.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace cubedraw {

std::string label_string(Vertex v, int d) {
  std::string s(d, '0');
  for (int i = 0; i < d; ++i)
    if (v >> i & 1) s[i] = '1';
  return s;
}

Vertex parse_label(const std::string& s) {
  Vertex v = 0;
  for (size_t i = 0; i < s.size(); ++i) {
    if (s[i] != '0' && s[i] != '1') throw std::invalid_argument("bad label: " + s);
    if (s[i] == '1') v |= 1 << i;
  }
  return v;
}

bool hamming_adjacent(const std::string& a, const std::string& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("label length mismatch");
  int diff = 0;
  for (size_t i = 0; i < a.size(); ++i) diff += a[i] != b[i];
  return diff == 1;
}

HypercubeGraph build_hypercube(int d) {
  if (d < 1 || d > 16) throw std::out_of_range("dimension must be in [1,16]");
  HypercubeGraph g;
  g.d = d;
  g.edges.reserve(static_cast<size_t>(d) << (d - 1));
  for (Vertex v = 0; v < (1 << d); ++v)
    for (int i = 0; i < d; ++i)
      if (!(v >> i & 1)) g.edges.emplace_back(v, v | 1 << i);
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

CubeAutomorphism identity_automorphism(int d) {
  CubeAutomorphism a;
  a.perm.resize(d);
  std::iota(a.perm.begin(), a.perm.end(), 0);
  return a;
}

std::vector<CubeAutomorphism> enumerate_automorphisms(int d) {
  if (d < 1 || d > 6) throw std::out_of_range("automorphism enumeration needs d <= 6");
  std::vector<int> perm(d);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<CubeAutomorphism> out;
  out.reserve(static_cast<size_t>(1 << d) *
              std::accumulate(perm.begin(), perm.end(), size_t{1},
                              [](size_t f, int i) { return f * (i + 1); }));
  do {
    for (uint32_t flip = 0; flip < (1u << d); ++flip)
      out.push_back(CubeAutomorphism{perm, flip});
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace cubedraw

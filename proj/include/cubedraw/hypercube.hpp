#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace cubedraw {

// Vertices of Q_d are integers in [0, 2^d). Bit i-1 holds coordinate x_i,
// so a label string x_1 x_2 ... x_d reads as the integer sum x_i * 2^(i-1).
using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

inline Edge make_edge(Vertex a, Vertex b) {
  return a < b ? Edge{a, b} : Edge{b, a};
}

// "x_1 x_2 ... x_d", leftmost character is x_1 (weight 1).
std::string label_string(Vertex v, int d);
Vertex parse_label(const std::string& s);

inline bool hamming_adjacent(Vertex a, Vertex b) {
  return __builtin_popcount(static_cast<unsigned>(a ^ b)) == 1;
}

// String form; throws std::invalid_argument on length mismatch.
bool hamming_adjacent(const std::string& a, const std::string& b);

struct HypercubeGraph {
  int d = 0;
  std::vector<Edge> edges;  // lexicographically sorted

  int num_vertices() const { return 1 << d; }
};

// Throws std::out_of_range unless 1 <= d <= 16.
HypercubeGraph build_hypercube(int d);

// v -> flip ^ (bits of v permuted by perm); perm[i] is the image coordinate
// of coordinate i (0-based).
struct CubeAutomorphism {
  std::vector<int> perm;
  uint32_t flip = 0;

  Vertex operator()(Vertex v) const {
    Vertex out = 0;
    for (int i = 0; i < static_cast<int>(perm.size()); ++i)
      if (v >> i & 1) out |= 1 << perm[i];
    return out ^ static_cast<Vertex>(flip);
  }
};

CubeAutomorphism identity_automorphism(int d);

// All d! * 2^d automorphisms; throws std::out_of_range for d > 6.
std::vector<CubeAutomorphism> enumerate_automorphisms(int d);

}  // namespace cubedraw

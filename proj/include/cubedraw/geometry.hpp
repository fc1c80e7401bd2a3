#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cubedraw/solvers.hpp"

namespace cubedraw {

struct Point {
  long long x = 0, y = 0;
  bool operator==(const Point&) const = default;
};

enum class SegCross { No, Yes, Degenerate };

// Proper interior crossing of segments p1p2 and q1q2, exact integer
// orientation signs. Shared endpoints do not cross; collinear overlap or an
// endpoint on the other segment's interior is Degenerate (caller must
// regenerate coordinates).
SegCross segments_cross(Point p1, Point p2, Point q1, Point q2);

struct RectilinearDrawing {
  int num_vertices = 0;
  std::vector<Edge> edges;
  std::vector<Point> coords;
};

struct AbstractSimpleDrawing {
  int num_vertices = 0;
  std::vector<Edge> edges;
  // Unordered index pairs into `edges`, stored (i < j), sorted.
  std::vector<std::pair<int, int>> crossings;
};

// Weak-isomorphism data of a drawing: which edge pairs cross.
AbstractSimpleDrawing to_abstract(const ConvexDrawing& d);
// Throws std::domain_error on degenerate geometry.
AbstractSimpleDrawing to_abstract(const RectilinearDrawing& d);

DrawnGraph from_abstract(const AbstractSimpleDrawing& d);
DrawnGraph from_rectilinear(const RectilinearDrawing& d);

// Uniform integer coordinates in [0, 2^20)^2, resampled until the drawing is
// in general position; deterministic per seed. Throws std::runtime_error
// after 1000 failed attempts.
RectilinearDrawing random_rectilinear(const HypercubeGraph& g, uint64_t seed);

// The bundled Q_3 simple drawing with no plane path of length 4. Vertices
// 0..3 are the outer cycle a,b,c,d; 4..7 their primed partners a',b',c',d'.
AbstractSimpleDrawing figure7_drawing();

extern const char* const kFigure7VertexNames[8];

struct Figure7Report {
  bool red_red_complete = false;     // all 6 red-red pairs cross
  bool red_two_blacks = false;       // each red crosses exactly 2 black edges
  bool red_hits_blue_cycle = false;  // each red crosses the blue cycle
  bool cycles_plane = false;         // each cycle internally crossing-free
  int longest_plane_path_len = 0;
  bool no_plane_path_of_length_4 = false;
  std::vector<std::string> failures;

  bool all_ok() const { return failures.empty(); }
};

Figure7Report validate_figure7(const AbstractSimpleDrawing& d);

}  // namespace cubedraw

#include "cubedraw/svg.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <stdexcept>

namespace cubedraw {

namespace {

constexpr double kSize = 800.0;
constexpr double kMargin = 60.0;

struct XY {
  double x, y;
};

void emit_edges(std::ostringstream& out, const std::vector<Edge>& edges,
                const std::vector<XY>& pos, const std::set<Edge>& hi) {
  for (const Edge& e : edges) {
    if (hi.count(make_edge(e.first, e.second))) continue;
    out << "  <line x1=\"" << pos[e.first].x << "\" y1=\"" << pos[e.first].y
        << "\" x2=\"" << pos[e.second].x << "\" y2=\"" << pos[e.second].y
        << "\" stroke=\"#555\" stroke-width=\"1\"/>\n";
  }
  for (const Edge& e : edges) {
    if (!hi.count(make_edge(e.first, e.second))) continue;
    out << "  <line x1=\"" << pos[e.first].x << "\" y1=\"" << pos[e.first].y
        << "\" x2=\"" << pos[e.second].x << "\" y2=\"" << pos[e.second].y
        << "\" stroke=\"#d22\" stroke-width=\"3\"/>\n";
  }
}

void emit_vertices(std::ostringstream& out, const std::vector<XY>& pos,
                   const std::vector<std::string>& labels) {
  for (size_t v = 0; v < pos.size(); ++v) {
    out << "  <circle cx=\"" << pos[v].x << "\" cy=\"" << pos[v].y
        << "\" r=\"4\" fill=\"#000\"/>\n";
    out << "  <text x=\"" << pos[v].x + 6 << "\" y=\"" << pos[v].y - 6
        << "\" font-size=\"12\" font-family=\"monospace\">" << labels[v]
        << "</text>\n";
  }
}

}  // namespace

std::string export_svg(const DrawingDocument& doc,
                       const std::vector<Edge>& highlight) {
  std::set<Edge> hi;
  for (const Edge& e : highlight) hi.insert(make_edge(e.first, e.second));

  std::vector<XY> pos;
  std::vector<Edge> edges;
  int nv = 0;
  if (doc.convex) {
    const ConvexDrawing& d = *doc.convex;
    nv = d.n;
    edges = d.edges;
    pos.resize(nv);
    double r = kSize / 2 - kMargin;
    for (int s = 0; s < d.n; ++s) {
      // Clockwise from 12 o'clock, matching slot order.
      double ang = -M_PI / 2 + 2 * M_PI * s / d.n;
      pos[d.vertex_at[s]] = {kSize / 2 + r * std::cos(ang),
                             kSize / 2 + r * std::sin(ang)};
    }
  } else if (doc.rect) {
    const RectilinearDrawing& d = *doc.rect;
    nv = d.num_vertices;
    edges = d.edges;
    long long xmin = d.coords[0].x, xmax = xmin, ymin = d.coords[0].y, ymax = ymin;
    for (const Point& p : d.coords) {
      xmin = std::min(xmin, p.x);
      xmax = std::max(xmax, p.x);
      ymin = std::min(ymin, p.y);
      ymax = std::max(ymax, p.y);
    }
    double span = std::max<long long>({xmax - xmin, ymax - ymin, 1});
    double scale = (kSize - 2 * kMargin) / span;
    pos.resize(nv);
    for (int v = 0; v < nv; ++v)
      pos[v] = {kMargin + (d.coords[v].x - xmin) * scale,
                kMargin + (d.coords[v].y - ymin) * scale};
  } else {
    throw std::invalid_argument("abstract documents have no geometry to render");
  }

  std::vector<std::string> labels(nv);
  for (int v = 0; v < nv; ++v)
    labels[v] = doc.d ? label_string(v, *doc.d) : std::to_string(v);

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kSize
      << "\" height=\"" << kSize << "\" viewBox=\"0 0 " << kSize << " "
      << kSize << "\">\n";
  emit_edges(out, edges, pos, hi);
  emit_vertices(out, pos, labels);
  out << "</svg>\n";
  return out.str();
}

}  // namespace cubedraw

#pragma once

#include <string>
#include <vector>

#include "cubedraw/json_io.hpp"

namespace cubedraw {

// Renders a convex (vertices on a circle) or rectilinear document; edges in
// `highlight` are drawn thick and red on top. Throws std::invalid_argument
// for abstract documents (no geometry to render).
std::string export_svg(const DrawingDocument& doc,
                       const std::vector<Edge>& highlight = {});

}  // namespace cubedraw

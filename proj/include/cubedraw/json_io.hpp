#pragma once

#include <map>
#include <optional>
#include <string>

#include <json.hpp>

#include "cubedraw/geometry.hpp"

namespace cubedraw {

// Version-tagged interchange document wrapping the three drawing kinds.
struct DrawingDocument {
  int format_version = 1;
  std::string kind;  // "convex" | "rectilinear" | "abstract"
  std::optional<int> d;
  std::map<std::string, std::string> metadata;  // seeds etc., reproducibility

  std::optional<ConvexDrawing> convex;
  std::optional<RectilinearDrawing> rect;
  std::optional<AbstractSimpleDrawing> abstract;
};

DrawingDocument document_from(ConvexDrawing d, std::optional<int> dim = {});
DrawingDocument document_from(RectilinearDrawing d, std::optional<int> dim = {});
DrawingDocument document_from(AbstractSimpleDrawing d,
                              std::optional<int> dim = {});

nlohmann::json to_json(const DrawingDocument& doc);
// Throws std::invalid_argument on malformed or unknown-kind documents.
DrawingDocument parse_document(const nlohmann::json& j);

// Crossing-relation view for the solvers, whatever the kind.
DrawnGraph document_graph(const DrawingDocument& doc);

nlohmann::json result_json(const PlaneSubgraphResult& r);

}  // namespace cubedraw

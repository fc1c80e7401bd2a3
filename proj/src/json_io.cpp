#include "cubedraw/json_io.hpp"

#include <stdexcept>

namespace cubedraw {

using nlohmann::json;

DrawingDocument document_from(ConvexDrawing d, std::optional<int> dim) {
  DrawingDocument doc;
  doc.kind = "convex";
  doc.d = dim;
  doc.convex = std::move(d);
  return doc;
}

DrawingDocument document_from(RectilinearDrawing d, std::optional<int> dim) {
  DrawingDocument doc;
  doc.kind = "rectilinear";
  doc.d = dim;
  doc.rect = std::move(d);
  return doc;
}

DrawingDocument document_from(AbstractSimpleDrawing d, std::optional<int> dim) {
  DrawingDocument doc;
  doc.kind = "abstract";
  doc.d = dim;
  doc.abstract = std::move(d);
  return doc;
}

static json edges_json(const std::vector<Edge>& edges) {
  json out = json::array();
  for (const Edge& e : edges) out.push_back({e.first, e.second});
  return out;
}

static std::vector<Edge> edges_from(const json& j) {
  std::vector<Edge> out;
  for (const auto& e : j)
    out.push_back(make_edge(e.at(0).get<int>(), e.at(1).get<int>()));
  return out;
}

json to_json(const DrawingDocument& doc) {
  json j;
  j["format_version"] = doc.format_version;
  j["kind"] = doc.kind;
  if (doc.d) j["d"] = *doc.d;
  if (!doc.metadata.empty()) j["metadata"] = doc.metadata;
  if (doc.kind == "convex") {
    if (!doc.convex) throw std::invalid_argument("convex document without data");
    j["order"] = doc.convex->vertex_at;
    j["edges"] = edges_json(doc.convex->edges);
  } else if (doc.kind == "rectilinear") {
    if (!doc.rect) throw std::invalid_argument("rectilinear document without data");
    json coords = json::array();
    for (const Point& p : doc.rect->coords) coords.push_back({p.x, p.y});
    j["coords"] = coords;
    j["edges"] = edges_json(doc.rect->edges);
  } else if (doc.kind == "abstract") {
    if (!doc.abstract) throw std::invalid_argument("abstract document without data");
    j["num_vertices"] = doc.abstract->num_vertices;
    j["edges"] = edges_json(doc.abstract->edges);
    json crossings = json::array();
    for (auto [a, b] : doc.abstract->crossings) crossings.push_back({a, b});
    j["crossings"] = crossings;
  } else {
    throw std::invalid_argument("unknown document kind: " + doc.kind);
  }
  return j;
}

DrawingDocument parse_document(const json& j) {
  DrawingDocument doc;
  try {
    doc.format_version = j.at("format_version");
    if (doc.format_version != 1)
      throw std::invalid_argument("unsupported format version");
    doc.kind = j.at("kind");
    if (j.contains("d")) doc.d = j.at("d").get<int>();
    if (j.contains("metadata"))
      doc.metadata = j.at("metadata").get<std::map<std::string, std::string>>();
    if (doc.kind == "convex") {
      doc.convex = make_convex_drawing(j.at("order").get<std::vector<Vertex>>(),
                                       edges_from(j.at("edges")));
    } else if (doc.kind == "rectilinear") {
      RectilinearDrawing r;
      r.edges = edges_from(j.at("edges"));
      for (const auto& p : j.at("coords"))
        r.coords.push_back({p.at(0).get<long long>(), p.at(1).get<long long>()});
      r.num_vertices = static_cast<int>(r.coords.size());
      doc.rect = std::move(r);
    } else if (doc.kind == "abstract") {
      AbstractSimpleDrawing a;
      a.num_vertices = j.at("num_vertices");
      a.edges = edges_from(j.at("edges"));
      for (const auto& c : j.at("crossings")) {
        int x = c.at(0), y = c.at(1);
        if (x > y) std::swap(x, y);
        a.crossings.emplace_back(x, y);
      }
      doc.abstract = std::move(a);
    } else {
      throw std::invalid_argument("unknown document kind: " + doc.kind);
    }
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed document: ") + e.what());
  }
  return doc;
}

DrawnGraph document_graph(const DrawingDocument& doc) {
  if (doc.convex) return from_convex(*doc.convex);
  if (doc.rect) return from_rectilinear(*doc.rect);
  if (doc.abstract) return from_abstract(*doc.abstract);
  throw std::invalid_argument("document carries no drawing");
}

json result_json(const PlaneSubgraphResult& r) {
  json j;
  switch (r.kind) {
    case SubgraphKind::Path: j["kind"] = "path"; break;
    case SubgraphKind::Matching: j["kind"] = "matching"; break;
    case SubgraphKind::Subgraph: j["kind"] = "subgraph"; break;
    case SubgraphKind::Cycle: j["kind"] = "cycle"; break;
  }
  j["size"] = r.size;
  j["verified"] = r.verified;
  j["proven_optimal"] = r.proven_optimal;
  j["edges"] = edges_json(r.edges);
  return j;
}

}  // namespace cubedraw

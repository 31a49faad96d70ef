#include "sipoly/io.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "sipoly/check.hpp"
#include "sipoly/embed.hpp"

namespace sipoly {

using nlohmann::ordered_json;

namespace {

std::vector<std::vector<int>> parse_lists(const ordered_json& node, int n, const char* key) {
  if (!node.is_array())
    throw Error(ErrorKind::SchemaError, std::string(key) + " must be an array of arrays");
  if (static_cast<int>(node.size()) != n)
    throw Error(ErrorKind::SchemaError,
                std::string(key) + " must have one list per vertex (" + std::to_string(n) + ")");
  std::vector<std::vector<int>> lists(n);
  for (int v = 0; v < n; ++v) {
    const auto& row = node[v];
    if (!row.is_array())
      throw Error(ErrorKind::SchemaError,
                  std::string(key) + "[" + std::to_string(v) + "] must be an array");
    for (size_t k = 0; k < row.size(); ++k) {
      if (!row[k].is_number_integer())
        throw Error(ErrorKind::SchemaError, std::string(key) + "[" + std::to_string(v) + "][" +
                                                std::to_string(k) + "] must be an integer");
      const int u = row[k].get<int>();
      if (u < 0 || u >= n)
        throw Error(ErrorKind::SchemaError, std::string(key) + "[" + std::to_string(v) + "][" +
                                                std::to_string(k) + "] is out of range");
      lists[v].push_back(u);
    }
  }
  return lists;
}

}  // namespace

CombinatorialMap parse_input(const std::string& bytes) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(bytes);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
  if (!doc.is_object()) throw Error(ErrorKind::SchemaError, "document must be a JSON object");
  if (!doc.contains("vertices") || !doc["vertices"].is_number_integer())
    throw Error(ErrorKind::SchemaError, "missing integer field \"vertices\"");
  const int n = doc["vertices"].get<int>();
  if (n < 1) throw Error(ErrorKind::SchemaError, "\"vertices\" must be at least 1");

  const bool has_rot = doc.contains("rotations");
  const bool has_adj = doc.contains("adjacency");
  if (has_rot == has_adj)
    throw Error(ErrorKind::SchemaError, "exactly one of \"rotations\" or \"adjacency\" required");

  if (has_rot) return build_map(parse_lists(doc["rotations"], n, "rotations"));
  return build_map(embed_planar(parse_lists(doc["adjacency"], n, "adjacency")));
}

std::string map_document(const CombinatorialMap& map) {
  ordered_json doc;
  doc["vertices"] = map.vertex_count();
  doc["rotations"] = map.rotations();
  return doc.dump(2) + "\n";
}

ExportFormat parse_format(const std::string& name) {
  if (name == "json") return ExportFormat::Json;
  if (name == "dot") return ExportFormat::Dot;
  if (name == "svg") return ExportFormat::Svg;
  throw Error(ErrorKind::UnsupportedFormat, "unknown format \"" + name + "\"");
}

namespace {

std::string export_dot(const Polyhedron& p) {
  std::ostringstream os;
  os << "graph map {\n";
  for (EdgeId e = 0; e < p.edge_count(); ++e) {
    auto [u, v] = p.map().edge_endpoints(e);
    os << "  " << u << " -- " << v << ";\n";
  }
  os << "}\n";
  for (FaceId f = 0; f < p.face_count(); ++f) {
    os << "// face " << f << ":";
    for (VertexId v : p.face_walk(f)) os << " " << v;
    os << "\n";
  }
  return os.str();
}

// Barycentric layout: the largest face spans a convex outer polygon,
// every interior vertex sits at the mean of its neighbors.
std::vector<std::pair<double, double>> tutte_layout(const Polyhedron& p) {
  const int n = p.vertex_count();
  FaceId outer = 0;
  for (FaceId f = 1; f < p.face_count(); ++f)
    if (p.face_size(f) > p.face_size(outer)) outer = f;

  std::vector<std::pair<double, double>> pos(n, {0.0, 0.0});
  std::vector<char> fixed(n, 0);
  const std::vector<VertexId>& rim = p.face_walk(outer);
  const double pi = std::acos(-1.0);
  for (size_t i = 0; i < rim.size(); ++i) {
    const double angle = 2.0 * pi * static_cast<double>(i) / static_cast<double>(rim.size());
    pos[rim[i]] = {std::cos(angle), std::sin(angle)};
    fixed[rim[i]] = 1;
  }

  // Dense Gaussian elimination on (I - A/deg) restricted to the free
  // vertices; sizes here are tiny.
  std::vector<int> free_index(n, -1);
  std::vector<VertexId> free_verts;
  for (VertexId v = 0; v < n; ++v)
    if (!fixed[v]) {
      free_index[v] = static_cast<int>(free_verts.size());
      free_verts.push_back(v);
    }
  const int m = static_cast<int>(free_verts.size());
  if (m > 0) {
    std::vector<std::vector<double>> a(m, std::vector<double>(m + 2, 0.0));
    for (int i = 0; i < m; ++i) {
      VertexId v = free_verts[i];
      a[i][i] = 1.0;
      const double w = 1.0 / p.degree(v);
      for (VertexId u : p.map().neighbors(v)) {
        if (fixed[u]) {
          a[i][m] += w * pos[u].first;
          a[i][m + 1] += w * pos[u].second;
        } else {
          a[i][free_index[u]] -= w;
        }
      }
    }
    for (int col = 0; col < m; ++col) {
      int pivot = col;
      for (int r = col + 1; r < m; ++r)
        if (std::fabs(a[r][col]) > std::fabs(a[pivot][col])) pivot = r;
      std::swap(a[col], a[pivot]);
      SIPOLY_CHECK(std::fabs(a[col][col]) > 1e-12, "singular layout system");
      for (int r = 0; r < m; ++r) {
        if (r == col) continue;
        const double factor = a[r][col] / a[col][col];
        for (int c = col; c < m + 2; ++c) a[r][c] -= factor * a[col][c];
      }
    }
    for (int i = 0; i < m; ++i)
      pos[free_verts[i]] = {a[i][m] / a[i][i], a[i][m + 1] / a[i][i]};
  }
  return pos;
}

std::string export_svg(const Polyhedron& p) {
  const auto pos = tutte_layout(p);
  const double size = 600.0, margin = 40.0;
  auto sx = [&](double x) { return margin + (x + 1.0) * 0.5 * (size - 2 * margin); };
  auto sy = [&](double y) { return margin + (1.0 - y) * 0.5 * (size - 2 * margin); };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size
     << "\" viewBox=\"0 0 " << size << " " << size << "\">\n";
  for (EdgeId e = 0; e < p.edge_count(); ++e) {
    auto [u, v] = p.map().edge_endpoints(e);
    os << "  <line x1=\"" << sx(pos[u].first) << "\" y1=\"" << sy(pos[u].second) << "\" x2=\""
       << sx(pos[v].first) << "\" y2=\"" << sy(pos[v].second)
       << "\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
  }
  for (VertexId v = 0; v < p.vertex_count(); ++v) {
    os << "  <circle cx=\"" << sx(pos[v].first) << "\" cy=\"" << sy(pos[v].second)
       << "\" r=\"9\" fill=\"white\" stroke=\"black\"/>\n";
    os << "  <text x=\"" << sx(pos[v].first) << "\" y=\"" << sy(pos[v].second) + 4
       << "\" text-anchor=\"middle\" font-size=\"11\" font-family=\"sans-serif\">" << v
       << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace

std::string export_polyhedron(const Polyhedron& p, ExportFormat format) {
  switch (format) {
    case ExportFormat::Json: return map_document(p.map());
    case ExportFormat::Dot: return export_dot(p);
    case ExportFormat::Svg: return export_svg(p);
  }
  throw Error(ErrorKind::UnsupportedFormat, "unknown format");
}

namespace {

ordered_json move_to_json(const ExpansionMove& m) {
  ordered_json j;
  j["vertex"] = m.vertex;
  j["arc_start"] = m.arc_start;
  j["arc_len"] = m.arc_len;
  j["diagonal"] = {m.diag_x, m.diag_y};
  j["swap"] = m.swap_assignment;
  return j;
}

ExpansionMove move_from_json(const ordered_json& j) {
  ExpansionMove m;
  try {
    m.vertex = j.at("vertex").get<int>();
    m.arc_start = j.at("arc_start").get<int>();
    m.arc_len = j.at("arc_len").get<int>();
    m.diag_x = j.at("diagonal").at(0).get<int>();
    m.diag_y = j.at("diagonal").at(1).get<int>();
    m.swap_assignment = j.at("swap").get<bool>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::SchemaError, std::string("bad move record: ") + e.what());
  }
  return m;
}

}  // namespace

ordered_json census_to_json(const Census& census) {
  ordered_json doc;
  doc["max_v"] = census.max_v;
  doc["entries"] = ordered_json::array();
  for (const auto& [v, entries] : census.by_v) {
    for (const CensusEntry& entry : entries) {
      ordered_json e;
      e["code"] = entry.code.str();
      e["v"] = entry.v;
      e["e"] = entry.e;
      e["f"] = entry.f;
      e["involution"] = entry.involution;
      ordered_json prov;
      if (entry.from_expansion) {
        prov["method"] = "expansion";
        prov["wheel_rim"] = entry.wheel_rim;
        prov["moves"] = ordered_json::array();
        for (const ExpansionMove& m : entry.moves) prov["moves"].push_back(move_to_json(m));
      } else {
        prov["method"] = "generate-and-filter";
      }
      e["provenance"] = prov;
      e["chiral"] = entry.chiral;
      doc["entries"].push_back(e);
    }
  }
  return doc;
}

Census census_from_json(const ordered_json& doc) {
  Census census;
  try {
    census.max_v = doc.at("max_v").get<int>();
    for (const auto& e : doc.at("entries")) {
      CensusEntry entry;
      entry.code = CanonicalCode::parse(e.at("code").get<std::string>());
      entry.v = e.at("v").get<int>();
      entry.e = e.at("e").get<int>();
      entry.f = e.at("f").get<int>();
      entry.involution = e.at("involution").get<std::vector<std::vector<int>>>();
      entry.chiral = e.at("chiral").get<bool>();
      const auto& prov = e.at("provenance");
      entry.from_expansion = prov.at("method").get<std::string>() == "expansion";
      if (entry.from_expansion) {
        entry.wheel_rim = prov.at("wheel_rim").get<int>();
        for (const auto& m : prov.at("moves")) entry.moves.push_back(move_from_json(m));
      }
      census.by_v[entry.v].push_back(std::move(entry));
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::SchemaError, std::string("bad census document: ") + e.what());
  }
  return census;
}

}  // namespace sipoly

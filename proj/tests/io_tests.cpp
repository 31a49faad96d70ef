#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "helpers.hpp"
#include "sipoly/io.hpp"

using namespace sipoly;
using namespace testutil;

namespace {

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::InvalidInput;
}

}  // namespace

TEST_CASE("parse a rotations document") {
  const std::string doc = R"({"vertices": 4,
    "rotations": [[1,2,3],[0,3,2],[0,1,3],[0,2,1]]})";
  CombinatorialMap m = parse_input(doc);
  CHECK(m.vertex_count() == 4);
  CHECK(m.edge_count() == 6);
}

TEST_CASE("parse an adjacency document through the embedder") {
  nlohmann::ordered_json doc;
  doc["vertices"] = 8;
  doc["adjacency"] = cube_adjacency();
  CombinatorialMap m = parse_input(doc.dump());
  CHECK(euler_check(m));
  CHECK(trace_faces(m).size() == 6);
}

TEST_CASE("parse errors") {
  CHECK(kind_of([] { parse_input("{\"vertices\": 4, \"rotations\": [["); }) ==
        ErrorKind::ParseError);
  CHECK(kind_of([] { parse_input("[1,2,3]"); }) == ErrorKind::SchemaError);
  CHECK(kind_of([] { parse_input("{\"rotations\": [[1],[0]]}"); }) == ErrorKind::SchemaError);
  CHECK(kind_of([] { parse_input("{\"vertices\": 2}"); }) == ErrorKind::SchemaError);
  CHECK(kind_of([] {
          parse_input("{\"vertices\": 2, \"rotations\": [[1],[0]], \"adjacency\": [[1],[0]]}");
        }) == ErrorKind::SchemaError);
  CHECK(kind_of([] { parse_input("{\"vertices\": 2, \"rotations\": [[5],[0]]}"); }) ==
        ErrorKind::SchemaError);
  // Build errors pass through.
  CHECK(kind_of([] { parse_input("{\"vertices\": 2, \"rotations\": [[1],[]]}"); }) ==
        ErrorKind::EmptyRotation);
}

TEST_CASE("json export round-trips") {
  for (const Polyhedron& p : {wheel(5), cube()}) {
    std::string text = export_polyhedron(p, ExportFormat::Json);
    CombinatorialMap back = parse_input(text);
    CHECK(are_isomorphic(Polyhedron::validate(back), p));
  }
}

TEST_CASE("dot export lists every edge and face") {
  Polyhedron w5 = wheel(5);
  std::string dot = export_polyhedron(w5, ExportFormat::Dot);
  CHECK(dot.find("graph map {") != std::string::npos);
  int edge_lines = 0;
  for (size_t at = dot.find(" -- "); at != std::string::npos; at = dot.find(" -- ", at + 1))
    ++edge_lines;
  CHECK(edge_lines == 10);
  int face_lines = 0;
  for (size_t at = dot.find("// face"); at != std::string::npos; at = dot.find("// face", at + 1))
    ++face_lines;
  CHECK(face_lines == 6);
}

TEST_CASE("svg export draws every vertex and edge") {
  Polyhedron c = cube();
  std::string svg = export_polyhedron(c, ExportFormat::Svg);
  CHECK(svg.rfind("<svg", 0) == 0);
  int circles = 0;
  for (size_t at = svg.find("<circle"); at != std::string::npos; at = svg.find("<circle", at + 1))
    ++circles;
  CHECK(circles == 8);
  int lines = 0;
  for (size_t at = svg.find("<line"); at != std::string::npos; at = svg.find("<line", at + 1))
    ++lines;
  CHECK(lines == 12);
}

TEST_CASE("unknown formats are rejected") {
  CHECK(kind_of([] { parse_format("pdf"); }) == ErrorKind::UnsupportedFormat);
  CHECK(parse_format("json") == ExportFormat::Json);
  CHECK(parse_format("dot") == ExportFormat::Dot);
  CHECK(parse_format("svg") == ExportFormat::Svg);
}

#pragma once

#include <vector>

#include "sipoly/duality.hpp"
#include "sipoly/polyhedron.hpp"

namespace sipoly {

/// Vertex-edge-face incidence graph of a polyhedron, as a polyhedron in
/// its own right.  Vertices are laid out as [0,V) vertex cells,
/// [V, V+E) edge cells, [V+E, V+E+F) face cells; every face is a
/// quadrilateral (vertex, edge, face, edge).
struct SquareGraph {
  Polyhedron graph;
  int source_vertices = 0;
  int source_edges = 0;
  int source_faces = 0;

  enum class CellKind { Vertex, Edge, Face };

  int vertex_cell(VertexId v) const { return v; }
  int edge_cell(EdgeId e) const { return source_vertices + e; }
  int face_cell(FaceId f) const { return source_vertices + source_edges + f; }
  CellKind kind(int cell) const {
    if (cell < source_vertices) return CellKind::Vertex;
    if (cell < source_vertices + source_edges) return CellKind::Edge;
    return CellKind::Face;
  }
  int source_index(int cell) const {
    if (cell < source_vertices) return cell;
    if (cell < source_vertices + source_edges) return cell - source_vertices;
    return cell - source_vertices - source_edges;
  }
};

SquareGraph graph_of_squares(const Polyhedron& p);

/// Permutation of the square-graph vertices.
struct CellMap {
  std::vector<int> image;
};

/// The permutation a strong involution induces on the cells: vertex
/// cells to face cells via tau, face cells back via its inverse, edge
/// cells to edge cells via the edge map.
CellMap induced_cell_map(const Polyhedron& p, const StrongInvolution& tau, const SquareGraph& sq);

bool is_automorphism(const SquareGraph& sq, const CellMap& m);
bool is_involution(const CellMap& m);

/// True iff m fixes no vertex, no edge (as an unordered pair), and no
/// face (as a cell) of the square graph.
bool is_fixed_point_free(const SquareGraph& sq, const CellMap& m);

}  // namespace sipoly

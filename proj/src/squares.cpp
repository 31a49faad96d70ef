#include "sipoly/squares.hpp"

#include <algorithm>

#include "sipoly/check.hpp"

namespace sipoly {

SquareGraph graph_of_squares(const Polyhedron& p) {
  const CombinatorialMap& m = p.map();
  const int nv = m.vertex_count(), ne = m.edge_count(), nf = p.face_count();
  const int total = nv + ne + nf;
  auto vcell = [&](VertexId v) { return v; };
  auto ecell = [&](EdgeId e) { return nv + e; };
  auto fcell = [&](FaceId f) { return nv + ne + f; };

  // One quadrilateral per corner (= dart): (origin, edge, face, edge of
  // the walk predecessor).  The rotations below are the unique ones
  // whose face orbits are exactly those corner quads: edges in rotation
  // order around a vertex cell, (endpoint, face, endpoint, face)
  // around an edge cell, and the reversed boundary walk around a face
  // cell.
  std::vector<std::vector<int>> rot(total);

  for (VertexId v = 0; v < nv; ++v)
    for (DartId d : m.darts_at(v)) rot[vcell(v)].push_back(ecell(m.edge_of(d)));

  for (EdgeId e = 0; e < ne; ++e) {
    const DartId d = 2 * e;
    rot[ecell(e)] = {vcell(m.origin(d)), fcell(p.face_of(d)), vcell(m.head(d)),
                     fcell(p.face_of(m.twin(d)))};
  }

  for (FaceId f = 0; f < nf; ++f) {
    const std::vector<DartId>& walk = p.faces().walks[f];
    for (auto it = walk.rbegin(); it != walk.rend(); ++it)
      rot[fcell(f)].push_back(ecell(m.edge_of(*it)));
  }

  SquareGraph sq{Polyhedron::validate(build_map(rot)), nv, ne, nf};
  SIPOLY_CHECK(sq.graph.vertex_count() == total, "cell count mismatch");
  return sq;
}

CellMap induced_cell_map(const Polyhedron& p, const StrongInvolution& tau, const SquareGraph& sq) {
  SIPOLY_CHECK(sq.source_vertices == p.vertex_count() && sq.source_edges == p.edge_count() &&
                   sq.source_faces == p.face_count(),
               "square graph does not belong to this polyhedron");

  std::vector<VertexId> inverse(p.face_count(), -1);
  for (VertexId v = 0; v < p.vertex_count(); ++v) inverse[tau(v)] = v;

  CellMap cm;
  cm.image.assign(sq.graph.vertex_count(), -1);
  for (VertexId v = 0; v < p.vertex_count(); ++v) cm.image[sq.vertex_cell(v)] = sq.face_cell(tau(v));
  for (FaceId f = 0; f < p.face_count(); ++f) cm.image[sq.face_cell(f)] = sq.vertex_cell(inverse[f]);
  for (EdgeId e = 0; e < p.edge_count(); ++e)
    cm.image[sq.edge_cell(e)] = sq.edge_cell(tau_edge(p, tau, e));
  return cm;
}

bool is_automorphism(const SquareGraph& sq, const CellMap& m) {
  const Polyhedron& g = sq.graph;
  const int n = g.vertex_count();
  if (static_cast<int>(m.image.size()) != n) return false;
  std::vector<char> used(n, 0);
  for (int x : m.image) {
    if (x < 0 || x >= n || used[x]) return false;
    used[x] = 1;
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    auto [u, v] = g.map().edge_endpoints(e);
    if (!g.adjacent(m.image[u], m.image[v])) return false;
  }
  return true;
}

bool is_involution(const CellMap& m) {
  for (int x = 0; x < static_cast<int>(m.image.size()); ++x)
    if (m.image[m.image[x]] != x) return false;
  return true;
}

bool is_fixed_point_free(const SquareGraph& sq, const CellMap& m) {
  const Polyhedron& g = sq.graph;
  for (int x = 0; x < g.vertex_count(); ++x)
    if (m.image[x] == x) return false;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    auto [u, v] = g.map().edge_endpoints(e);
    if ((m.image[u] == u && m.image[v] == v) || (m.image[u] == v && m.image[v] == u)) return false;
  }
  for (FaceId f = 0; f < g.face_count(); ++f) {
    std::vector<int> mapped;
    for (VertexId v : g.face_vertices(f)) mapped.push_back(m.image[v]);
    std::sort(mapped.begin(), mapped.end());
    if (mapped == g.face_vertices(f)) return false;
  }
  return true;
}

}  // namespace sipoly

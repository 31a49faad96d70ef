#pragma once

#include <vector>

#include "sipoly/polyhedron.hpp"

namespace sipoly {

/// Vertex -> face bijection witnessing self-duality: u and v are
/// adjacent iff the image faces share an edge.
struct DualityIso {
  std::vector<FaceId> vertex_to_face;

  FaceId operator()(VertexId v) const { return vertex_to_face[v]; }
  bool operator==(const DualityIso&) const = default;
};

/// A duality satisfying the two involution conditions:
///   (1) u in tau(v)  iff  v in tau(u), for all vertex pairs;
///   (2) v not in tau(v), for every vertex.
struct StrongInvolution {
  DualityIso iso;

  FaceId operator()(VertexId v) const { return iso(v); }
  bool operator==(const StrongInvolution&) const = default;
};

/// True iff the bijection preserves adjacency in both directions.
bool is_duality(const Polyhedron& p, const DualityIso& d);

/// The complete list of duality isomorphisms, in lexicographic order of
/// their image sequences.  Empty iff the polyhedron is not self-dual.
std::vector<DualityIso> find_dualities(const Polyhedron& p);

bool is_strong_involution(const Polyhedron& p, const DualityIso& d);

std::vector<StrongInvolution> strong_involutions(const Polyhedron& p);

/// The edge tau(a) /\ tau(b) for e = (a,b); an involution on edges.
EdgeId tau_edge(const Polyhedron& p, const StrongInvolution& tau, EdgeId e);

/// An edge (a,b) is a diameter iff a lies on tau(b).
bool is_diameter(const Polyhedron& p, const StrongInvolution& tau, EdgeId e);

}  // namespace sipoly

#pragma once

#include <span>
#include <vector>

#include "sipoly/duality.hpp"
#include "sipoly/polyhedron.hpp"

namespace sipoly {

/// Splits vertex v into two adjacent vertices.  The rotation at v,
/// read from dart_at(v), is cut into the arc [arc_start, arc_start +
/// arc_len) (kept by v) and the rest (moved to a new vertex appended at
/// the end); the new edge closes both rotations.  Dart ids persist, the
/// new edge gets the next free pair.
CombinatorialMap split_vertex(const CombinatorialMap& map, VertexId v, int arc_start, int arc_len);

/// Inserts an edge between the origins of walk[i] and walk[j] inside
/// the face bounded by `walk`, splitting it in two.  i and j must be
/// non-consecutive positions.  Dart ids persist.
CombinatorialMap add_diagonal(const CombinatorialMap& map, std::span<const DartId> walk, int i,
                              int j);

/// One simultaneous (vertex split, face diagonal) move: split `vertex`
/// by the arc partition, draw the diagonal (diag_x, diag_y) in the face
/// the involution assigns to `vertex`, and give the two halves to the
/// two split vertices (order controlled by swap_assignment).
struct ExpansionMove {
  VertexId vertex = -1;
  int arc_start = 0;
  int arc_len = 0;
  VertexId diag_x = -1;
  VertexId diag_y = -1;
  bool swap_assignment = false;

  bool operator==(const ExpansionMove&) const = default;
};

struct Expansion {
  Polyhedron polyhedron;
  StrongInvolution involution;
  VertexId new_vertex;  // the split partner; `vertex` keeps its label
};

/// Applies the move; throws InvalidMove when the constructed map fails
/// polyhedron validation or no strong involution results.
Expansion expand_step(const Polyhedron& p, const StrongInvolution& tau, const ExpansionMove& m);

/// All moves whose application yields a strongly involutive polyhedron.
/// Candidates are every (vertex, arc partition, diagonal, assignment)
/// combination passing the size constraints; each is validated by full
/// construction.
std::vector<ExpansionMove> enumerate_expansions(const Polyhedron& p, const StrongInvolution& tau);

/// Same enumeration, keeping the constructed results.
std::vector<std::pair<ExpansionMove, Expansion>> enumerate_expansions_with_results(
    const Polyhedron& p, const StrongInvolution& tau);

}  // namespace sipoly

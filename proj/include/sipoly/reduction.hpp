#pragma once

#include <utility>
#include <vector>

#include "sipoly/duality.hpp"
#include "sipoly/polyhedron.hpp"

namespace sipoly {

/// Removes the two darts of e from their rotations; the two incident
/// faces merge.  The raw result is returned without validation.
CombinatorialMap delete_edge(const CombinatorialMap& map, EdgeId e);
CombinatorialMap delete_edge(const Polyhedron& p, EdgeId e);

/// Edge contraction with relabeling bookkeeping.  The merged vertex
/// keeps the smaller endpoint label; higher labels shift down by one.
struct Contraction {
  CombinatorialMap map;
  VertexId merged_vertex;
  std::vector<VertexId> vertex_map;  // old label -> new label
};

/// Splices the rotations of the endpoints at the removed darts.
/// Parallel edges arising from triangles are kept, so the result fails
/// the simplicity gate exactly when the contraction leaves the class.
Contraction contract_edge(const CombinatorialMap& map, EdgeId e);
Contraction contract_edge(const Polyhedron& p, EdgeId e);

bool can_delete(const Polyhedron& p, EdgeId e);
bool can_contract(const Polyhedron& p, EdgeId e);
bool is_essential(const Polyhedron& p, EdgeId e);

/// The three obstructions to the remove-contract step.
struct EdgeFlags {
  bool on_triangle = false;
  bool in_three_cut = false;
  bool diameter = false;

  bool any() const { return on_triangle || in_three_cut || diameter; }
};

/// `tau` may be null, in which case the diameter flag is false.
EdgeFlags edge_flags(const Polyhedron& p, EdgeId e, const StrongInvolution* tau = nullptr);

/// Edges with all three flags clear, ascending by edge id.  Empty for
/// wheels; non-empty for every other strongly involutive polyhedron
/// (asserted by the acceptance suite, not here).
std::vector<EdgeId> find_reducible_edges(const Polyhedron& p, const StrongInvolution& tau);

struct ReduceStep {
  Polyhedron polyhedron;
  StrongInvolution involution;
  VertexId merged_vertex;
  std::vector<VertexId> vertex_map;  // old label -> new label
};

/// Contracts e = (a,b), deletes tau(ab), and carries the involution
/// over: unchanged off {a,b}, with the merged vertex sent to the face
/// obtained by joining tau(a) and tau(b) across the deleted edge.
/// Throws NotReducible when any flag of e is set.
ReduceStep reduce_step(const Polyhedron& p, const StrongInvolution& tau, EdgeId e);

struct ReductionStepRecord {
  std::pair<VertexId, VertexId> contracted;  // labels in the map of that step
  std::pair<VertexId, VertexId> deleted;
  CanonicalCode result_code;
};

struct ReductionTrace {
  std::vector<ReductionStepRecord> steps;
  int terminal_rim = 0;
  Polyhedron terminal;
  StrongInvolution terminal_involution;
};

/// Repeatedly applies reduce_step, taking the reducible edge that is
/// lexicographically first under canonical labels, until a wheel
/// remains.
ReductionTrace reduce_to_wheel(const Polyhedron& p, const StrongInvolution& tau);

}  // namespace sipoly

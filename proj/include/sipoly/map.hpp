#pragma once

#include <span>
#include <utility>
#include <vector>

#include "sipoly/error.hpp"

namespace sipoly {

using VertexId = int;
using DartId = int;
using EdgeId = int;
using FaceId = int;

/// Immutable rotation-system representation of a graph embedded on an
/// oriented surface.
///
/// Darts are directed half-edges.  The two darts of edge e are 2e and
/// 2e+1, so twin(d) = d ^ 1.  next(d) is the dart after d in the cyclic
/// order of outgoing darts around origin(d).
///
/// Orientation convention, fixed once and used everywhere (face tracing,
/// duals, square graphs): the face successor of d is next(twin(d)), and
/// faces are the orbits of that permutation.
class CombinatorialMap {
 public:
  /// Raw constructor from per-dart tables.  `next` must be a permutation
  /// whose cycles are exactly the darts sharing an origin.
  CombinatorialMap(int vertex_count, std::vector<int> origin, std::vector<int> next);

  int vertex_count() const { return vertex_count_; }
  int dart_count() const { return static_cast<int>(origin_.size()); }
  int edge_count() const { return dart_count() / 2; }

  DartId twin(DartId d) const { return d ^ 1; }
  DartId next(DartId d) const { return next_[d]; }
  DartId prev(DartId d) const { return prev_[d]; }
  DartId face_next(DartId d) const { return next_[d ^ 1]; }
  VertexId origin(DartId d) const { return origin_[d]; }
  VertexId head(DartId d) const { return origin_[d ^ 1]; }
  EdgeId edge_of(DartId d) const { return d >> 1; }
  std::pair<VertexId, VertexId> edge_endpoints(EdgeId e) const {
    return {origin_[2 * e], origin_[2 * e + 1]};
  }

  /// One outgoing dart per vertex, -1 for isolated vertices.
  DartId dart_at(VertexId v) const { return vertex_dart_[v]; }
  int degree(VertexId v) const { return degree_[v]; }

  std::vector<DartId> darts_at(VertexId v) const;
  std::vector<VertexId> neighbors(VertexId v) const;
  std::vector<std::vector<int>> rotations() const;

 private:
  int vertex_count_;
  std::vector<int> origin_;
  std::vector<int> next_;
  std::vector<int> prev_;
  std::vector<DartId> vertex_dart_;
  std::vector<int> degree_;
};

/// Faces of a map: boundary walks (cyclic dart sequences) plus the
/// dart -> face index.
struct FaceSet {
  std::vector<std::vector<DartId>> walks;
  std::vector<FaceId> face_of;

  int size() const { return static_cast<int>(walks.size()); }
  int face_length(FaceId f) const { return static_cast<int>(walks[f].size()); }
  std::vector<VertexId> walk_vertices(const CombinatorialMap& map, FaceId f) const;
  bool contains_vertex(const CombinatorialMap& map, FaceId f, VertexId v) const;
};

/// Builds a map from counterclockwise neighbor lists.  The k-th
/// occurrence of v in u's list is paired with the k-th occurrence of u
/// in v's list; loop occurrences pair up consecutively.
CombinatorialMap build_map(const std::vector<std::vector<int>>& rotations);

FaceSet trace_faces(const CombinatorialMap& map);

/// True iff V - E + F = 2.  Throws Disconnected when the underlying
/// graph is not connected (face counts of disconnected maps do not
/// measure genus).
bool euler_check(const CombinatorialMap& map);

bool is_simple(const CombinatorialMap& map);
bool is_connected(const CombinatorialMap& map);

/// Standard connectivity of the graph minus `removed`; a remainder with
/// fewer than two vertices is vacuously connected.
bool connected_after_removal(const CombinatorialMap& map, std::span<const VertexId> removed);

/// True iff removing `removed` disconnects the graph.  A remainder with
/// at most one vertex counts as disconnected; the degenerate case makes
/// every endpoint pair of a K4 edge extendable to a 3-cutting set,
/// matching the obstruction to contraction.
bool is_cutting_set(const CombinatorialMap& map, std::span<const VertexId> removed);

/// Vertex count >= 4 and no cutting set of size <= 2, by pair removal.
bool is_three_connected(const CombinatorialMap& map);

}  // namespace sipoly

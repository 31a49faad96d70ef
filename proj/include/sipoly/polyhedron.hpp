#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "sipoly/map.hpp"

namespace sipoly {

/// A validated polyhedral map: simple, genus 0, 3-connected, at least
/// four vertices.  Faces and incidence indexes are computed once at
/// validation, never supplied by the caller.
class Polyhedron {
 public:
  static Polyhedron validate(const CombinatorialMap& map);

  const CombinatorialMap& map() const { return map_; }
  const FaceSet& faces() const { return faces_; }
  int vertex_count() const { return map_.vertex_count(); }
  int edge_count() const { return map_.edge_count(); }
  int face_count() const { return faces_.size(); }

  bool adjacent(VertexId u, VertexId v) const { return adj_[u * vertex_count() + v] != 0; }
  std::optional<EdgeId> edge_between(VertexId u, VertexId v) const;
  int degree(VertexId v) const { return map_.degree(v); }

  FaceId face_of(DartId d) const { return faces_.face_of[d]; }
  int face_size(FaceId f) const { return faces_.face_length(f); }
  bool face_contains(FaceId f, VertexId v) const;
  /// Vertices along the boundary walk, in walk order.
  const std::vector<VertexId>& face_walk(FaceId f) const { return face_walk_verts_[f]; }
  /// Sorted vertex set of the face.
  const std::vector<VertexId>& face_vertices(FaceId f) const { return face_verts_sorted_[f]; }

  std::pair<FaceId, FaceId> edge_faces(EdgeId e) const {
    return {faces_.face_of[2 * e], faces_.face_of[2 * e + 1]};
  }
  bool faces_adjacent(FaceId f, FaceId g) const { return face_pair_edge_[f * face_count() + g] >= 0; }
  std::optional<EdgeId> edge_between_faces(FaceId f, FaceId g) const;

 private:
  explicit Polyhedron(CombinatorialMap map);

  CombinatorialMap map_;
  FaceSet faces_;
  std::vector<std::vector<VertexId>> face_walk_verts_;
  std::vector<std::vector<VertexId>> face_verts_sorted_;
  std::vector<char> adj_;             // V x V
  std::vector<EdgeId> edge_index_;    // V x V, -1 when not adjacent
  std::vector<EdgeId> face_pair_edge_;  // F x F, -1 when not adjacent
};

/// First failed validation gate, or nullopt when the map is a
/// polyhedron.  Gate order: NotSimple, NotGenusZero (includes
/// disconnected), NotThreeConnected, TooSmall.
std::optional<ErrorKind> validate_kind(const CombinatorialMap& map);

/// Dual polyhedron plus the edge correspondence: edge_map[e] is the
/// dual edge joining the two faces incident to e.  With the dart
/// numbering used here the correspondence is the identity, but callers
/// should rely on the returned table, not on that fact.
struct DualResult {
  Polyhedron polyhedron;
  std::vector<EdgeId> edge_map;
};
DualResult dual(const Polyhedron& p);

/// Hub plus an n-cycle rim; hub is vertex 0, rim is 1..n.
Polyhedron wheel(int n);

bool is_wheel(const Polyhedron& p);

/// Relabeling- and reflection-invariant identifier of a map.
struct CanonicalCode {
  std::vector<int> values;

  auto operator<=>(const CanonicalCode&) const = default;
  std::string str() const;
  static CanonicalCode parse(const std::string& text);
};

/// Canonical code together with the vertex relabeling that realizes it.
/// `chiral` is true when no orientation-reversing automorphism exists.
struct CanonicalForm {
  CanonicalCode code;
  std::vector<int> vertex_label;  // original vertex -> canonical label
  bool chiral = false;
};

CanonicalForm canonical_form(const CombinatorialMap& map);
CanonicalCode canonical_code(const CombinatorialMap& map);
CanonicalCode canonical_code(const Polyhedron& p);

bool are_isomorphic(const Polyhedron& p, const Polyhedron& q);

}  // namespace sipoly

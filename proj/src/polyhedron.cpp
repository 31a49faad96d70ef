#include "sipoly/polyhedron.hpp"

#include <algorithm>
#include <iterator>
#include <sstream>

#include "sipoly/check.hpp"

namespace sipoly {

namespace {

// No cutting set of size <= 2; does not require V >= 4 (the size gate
// is separate in validation).
bool has_no_small_cut(const CombinatorialMap& map) {
  const int n = map.vertex_count();
  if (!is_connected(map)) return false;
  for (VertexId v = 0; v < n; ++v) {
    const VertexId one[] = {v};
    if (!connected_after_removal(map, one)) return false;
  }
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = u + 1; v < n; ++v) {
      const VertexId two[] = {u, v};
      if (!connected_after_removal(map, two)) return false;
    }
  return true;
}

}  // namespace

std::optional<ErrorKind> validate_kind(const CombinatorialMap& map) {
  if (!is_simple(map)) return ErrorKind::NotSimple;
  if (!is_connected(map)) return ErrorKind::NotGenusZero;
  if (map.vertex_count() - map.edge_count() + trace_faces(map).size() != 2)
    return ErrorKind::NotGenusZero;
  if (!has_no_small_cut(map)) return ErrorKind::NotThreeConnected;
  if (map.vertex_count() < 4) return ErrorKind::TooSmall;
  return std::nullopt;
}

Polyhedron Polyhedron::validate(const CombinatorialMap& map) {
  if (auto kind = validate_kind(map)) throw Error(*kind, "map is not a polyhedron");
  return Polyhedron(map);
}

Polyhedron::Polyhedron(CombinatorialMap map) : map_(std::move(map)) {
  faces_ = trace_faces(map_);
  const int v_count = map_.vertex_count();
  const int f_count = faces_.size();

  face_walk_verts_.resize(f_count);
  face_verts_sorted_.resize(f_count);
  for (FaceId f = 0; f < f_count; ++f) {
    face_walk_verts_[f] = faces_.walk_vertices(map_, f);
    auto sorted = face_walk_verts_[f];
    std::sort(sorted.begin(), sorted.end());
    SIPOLY_CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end(),
                 "face boundary is not a simple cycle");
    SIPOLY_CHECK(sorted.size() >= 3, "face boundary shorter than a triangle");
    face_verts_sorted_[f] = std::move(sorted);
  }

  adj_.assign(v_count * v_count, 0);
  edge_index_.assign(v_count * v_count, -1);
  for (EdgeId e = 0; e < map_.edge_count(); ++e) {
    auto [u, v] = map_.edge_endpoints(e);
    adj_[u * v_count + v] = adj_[v * v_count + u] = 1;
    edge_index_[u * v_count + v] = edge_index_[v * v_count + u] = e;
  }

  face_pair_edge_.assign(f_count * f_count, -1);
  for (EdgeId e = 0; e < map_.edge_count(); ++e) {
    FaceId f = faces_.face_of[2 * e];
    FaceId g = faces_.face_of[2 * e + 1];
    SIPOLY_CHECK(f != g, "edge with the same face on both sides");
    SIPOLY_CHECK(face_pair_edge_[f * f_count + g] == -1, "two faces share more than one edge");
    face_pair_edge_[f * f_count + g] = face_pair_edge_[g * f_count + f] = e;
  }

  // 3-connectivity forces any two faces to meet in nothing, a vertex,
  // or an edge; downstream code leans on this.
  for (FaceId f = 0; f < f_count; ++f)
    for (FaceId g = f + 1; g < f_count; ++g) {
      std::vector<VertexId> common;
      std::set_intersection(face_verts_sorted_[f].begin(), face_verts_sorted_[f].end(),
                            face_verts_sorted_[g].begin(), face_verts_sorted_[g].end(),
                            std::back_inserter(common));
      SIPOLY_CHECK(common.size() <= 2, "faces meet in more than an edge");
      if (common.size() == 2)
        SIPOLY_CHECK(face_pair_edge_[f * f_count + g] >= 0 &&
                         edge_between(common[0], common[1]).has_value(),
                     "faces meet in two vertices without a shared edge");
    }
}

std::optional<EdgeId> Polyhedron::edge_between(VertexId u, VertexId v) const {
  EdgeId e = edge_index_[u * vertex_count() + v];
  if (e < 0) return std::nullopt;
  return e;
}

bool Polyhedron::face_contains(FaceId f, VertexId v) const {
  const auto& s = face_verts_sorted_[f];
  return std::binary_search(s.begin(), s.end(), v);
}

std::optional<EdgeId> Polyhedron::edge_between_faces(FaceId f, FaceId g) const {
  EdgeId e = face_pair_edge_[f * face_count() + g];
  if (e < 0) return std::nullopt;
  return e;
}

DualResult dual(const Polyhedron& p) {
  const CombinatorialMap& m = p.map();
  const int darts = m.dart_count();
  std::vector<int> origin(darts), next(darts);
  for (DartId d = 0; d < darts; ++d) {
    origin[d] = p.face_of(d);
    next[d] = m.face_next(d);
  }
  Polyhedron dp = Polyhedron::validate(CombinatorialMap(p.face_count(), origin, next));
  std::vector<EdgeId> edge_map(m.edge_count());
  for (EdgeId e = 0; e < m.edge_count(); ++e) edge_map[e] = e;
  return DualResult{std::move(dp), std::move(edge_map)};
}

Polyhedron wheel(int n) {
  if (n < 3) throw Error(ErrorKind::InvalidInput, "wheel rim must have at least 3 vertices");
  std::vector<std::vector<int>> rot(n + 1);
  for (int i = 1; i <= n; ++i) rot[0].push_back(i);
  for (int i = 1; i <= n; ++i) {
    int prev = i == 1 ? n : i - 1;
    int next = i == n ? 1 : i + 1;
    rot[i] = {0, prev, next};
  }
  return Polyhedron::validate(build_map(rot));
}

bool is_wheel(const Polyhedron& p) {
  const int v = p.vertex_count();
  if (p.edge_count() != 2 * v - 2) return false;
  VertexId hub = -1;
  for (VertexId u = 0; u < v; ++u)
    if (p.degree(u) == v - 1) {
      hub = u;
      break;
    }
  if (hub < 0) return false;
  for (VertexId u = 0; u < v; ++u)
    if (u != hub && p.degree(u) != 3) return false;
  // Rim must be one cycle through all non-hub vertices.
  VertexId start = hub == 0 ? 1 : 0;
  std::vector<char> seen(v, 0);
  VertexId cur = start, prev = -1;
  int count = 0;
  do {
    seen[cur] = 1;
    ++count;
    VertexId nxt = -1;
    for (VertexId w : p.map().neighbors(cur))
      if (w != hub && w != prev) nxt = w;
    if (nxt < 0) return false;
    prev = cur;
    cur = nxt;
  } while (cur != start && !seen[cur]);
  return cur == start && count == v - 1;
}

std::string CanonicalCode::str() const {
  std::ostringstream os;
  for (size_t i = 0; i < values.size(); ++i) {
    if (i) os << ',';
    os << values[i];
  }
  return os.str();
}

CanonicalCode CanonicalCode::parse(const std::string& text) {
  CanonicalCode code;
  std::istringstream is(text);
  std::string tok;
  while (std::getline(is, tok, ',')) {
    if (tok.empty()) throw Error(ErrorKind::ParseError, "empty token in canonical code");
    code.values.push_back(std::stoi(tok));
  }
  return code;
}

namespace {

// Breadth-first relabeling trace from (start, direction); identical
// sequences mean orientation-preserving isomorphism of rooted maps.
void bfs_code(const CombinatorialMap& m, DartId start, bool reversed, std::vector<int>& code,
              std::vector<int>* labels) {
  const int v_count = m.vertex_count();
  std::vector<int> label(v_count, -1);
  std::vector<DartId> entry(v_count, -1);
  code.clear();
  code.reserve(m.dart_count() + v_count + 1);
  code.push_back(v_count);

  std::vector<VertexId> order{m.origin(start)};
  label[m.origin(start)] = 0;
  entry[m.origin(start)] = start;
  int next_label = 1;

  for (size_t qi = 0; qi < order.size(); ++qi) {
    VertexId v = order[qi];
    DartId d = entry[v];
    const int deg = m.degree(v);
    for (int i = 0; i < deg; ++i) {
      VertexId u = m.head(d);
      if (label[u] < 0) {
        label[u] = next_label++;
        entry[u] = m.twin(d);
        order.push_back(u);
      }
      code.push_back(label[u]);
      d = reversed ? m.prev(d) : m.next(d);
    }
    code.push_back(-1);
  }
  SIPOLY_CHECK(next_label == v_count, "canonical trace requires a connected map");
  if (labels) *labels = std::move(label);
}

}  // namespace

CanonicalForm canonical_form(const CombinatorialMap& map) {
  SIPOLY_CHECK(map.dart_count() > 0, "canonical form of an edgeless map");
  std::vector<int> best_fwd, best_rev, current;
  DartId best_fwd_start = -1, best_rev_start = -1;
  for (DartId d = 0; d < map.dart_count(); ++d) {
    bfs_code(map, d, false, current, nullptr);
    if (best_fwd.empty() || current < best_fwd) {
      best_fwd = current;
      best_fwd_start = d;
    }
    bfs_code(map, d, true, current, nullptr);
    if (best_rev.empty() || current < best_rev) {
      best_rev = current;
      best_rev_start = d;
    }
  }
  CanonicalForm form;
  form.chiral = best_fwd != best_rev;
  const bool use_rev = best_rev < best_fwd;
  bfs_code(map, use_rev ? best_rev_start : best_fwd_start, use_rev, current, &form.vertex_label);
  form.code.values = std::move(current);
  return form;
}

CanonicalCode canonical_code(const CombinatorialMap& map) { return canonical_form(map).code; }

CanonicalCode canonical_code(const Polyhedron& p) { return canonical_code(p.map()); }

bool are_isomorphic(const Polyhedron& p, const Polyhedron& q) {
  if (p.vertex_count() != q.vertex_count() || p.edge_count() != q.edge_count()) return false;
  return canonical_code(p) == canonical_code(q);
}

}  // namespace sipoly

#include "sipoly/map.hpp"

#include <algorithm>
#include <map>

#include "sipoly/check.hpp"

namespace sipoly {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::AsymmetricIncidence: return "AsymmetricIncidence";
    case ErrorKind::EmptyRotation: return "EmptyRotation";
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::NonPlanar: return "NonPlanar";
    case ErrorKind::NotSimple: return "NotSimple";
    case ErrorKind::NotGenusZero: return "NotGenusZero";
    case ErrorKind::NotThreeConnected: return "NotThreeConnected";
    case ErrorKind::TooSmall: return "TooSmall";
    case ErrorKind::NotReducible: return "NotReducible";
    case ErrorKind::InvalidMove: return "InvalidMove";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::SchemaError: return "SchemaError";
    case ErrorKind::UnsupportedFormat: return "UnsupportedFormat";
    case ErrorKind::BoundMismatch: return "BoundMismatch";
  }
  return "UnknownError";
}

CombinatorialMap::CombinatorialMap(int vertex_count, std::vector<int> origin,
                                   std::vector<int> next)
    : vertex_count_(vertex_count), origin_(std::move(origin)), next_(std::move(next)) {
  SIPOLY_CHECK(vertex_count_ >= 1, "map must have at least one vertex");
  SIPOLY_CHECK(origin_.size() == next_.size(), "origin/next size mismatch");
  SIPOLY_CHECK(origin_.size() % 2 == 0, "dart count must be even");

  const int darts = dart_count();
  prev_.assign(darts, -1);
  vertex_dart_.assign(vertex_count_, -1);
  degree_.assign(vertex_count_, 0);

  for (DartId d = 0; d < darts; ++d) {
    SIPOLY_CHECK(origin_[d] >= 0 && origin_[d] < vertex_count_, "dart origin out of range");
    SIPOLY_CHECK(next_[d] >= 0 && next_[d] < darts, "next out of range");
    SIPOLY_CHECK(origin_[next_[d]] == origin_[d], "rotation leaves its vertex");
    SIPOLY_CHECK(prev_[next_[d]] == -1, "next is not a permutation");
    prev_[next_[d]] = d;
    if (vertex_dart_[origin_[d]] < 0) vertex_dart_[origin_[d]] = d;
    ++degree_[origin_[d]];
  }
  // Each vertex rotation must be a single cycle.
  std::vector<char> seen(darts, 0);
  for (VertexId v = 0; v < vertex_count_; ++v) {
    if (vertex_dart_[v] < 0) continue;
    DartId d = vertex_dart_[v];
    int steps = 0;
    do {
      SIPOLY_CHECK(!seen[d], "rotation cycles overlap");
      seen[d] = 1;
      d = next_[d];
      ++steps;
    } while (d != vertex_dart_[v]);
    SIPOLY_CHECK(steps == degree_[v], "rotation at vertex is not a single cycle");
  }
}

std::vector<DartId> CombinatorialMap::darts_at(VertexId v) const {
  std::vector<DartId> out;
  out.reserve(degree_[v]);
  DartId d0 = vertex_dart_[v];
  if (d0 < 0) return out;
  DartId d = d0;
  do {
    out.push_back(d);
    d = next_[d];
  } while (d != d0);
  return out;
}

std::vector<VertexId> CombinatorialMap::neighbors(VertexId v) const {
  std::vector<VertexId> out;
  out.reserve(degree_[v]);
  for (DartId d : darts_at(v)) out.push_back(head(d));
  return out;
}

std::vector<std::vector<int>> CombinatorialMap::rotations() const {
  std::vector<std::vector<int>> out(vertex_count_);
  for (VertexId v = 0; v < vertex_count_; ++v) out[v] = neighbors(v);
  return out;
}

CombinatorialMap build_map(const std::vector<std::vector<int>>& rotations) {
  const int n = static_cast<int>(rotations.size());
  if (n < 1) throw Error(ErrorKind::InvalidInput, "no vertices");

  for (int v = 0; v < n; ++v) {
    if (rotations[v].empty())
      throw Error(ErrorKind::EmptyRotation, "vertex " + std::to_string(v) + " has no neighbors");
    for (int u : rotations[v])
      if (u < 0 || u >= n)
        throw Error(ErrorKind::InvalidInput,
                    "vertex " + std::to_string(v) + " references invalid id " + std::to_string(u));
  }

  // Occurrence lists per ordered pair; in-order pairing.
  std::map<std::pair<int, int>, std::vector<int>> occ;
  for (int v = 0; v < n; ++v)
    for (int k = 0; k < static_cast<int>(rotations[v].size()); ++k)
      occ[{v, rotations[v][k]}].push_back(k);

  for (const auto& [pair, slots] : occ) {
    auto [a, b] = pair;
    if (a == b) {
      if (slots.size() % 2 != 0)
        throw Error(ErrorKind::AsymmetricIncidence,
                    "odd number of loop ends at vertex " + std::to_string(a));
    } else {
      auto it = occ.find({b, a});
      const size_t other = it == occ.end() ? 0 : it->second.size();
      if (slots.size() != other)
        throw Error(ErrorKind::AsymmetricIncidence,
                    "occurrences of " + std::to_string(b) + " at " + std::to_string(a) +
                        " do not match the reverse direction");
    }
  }

  std::map<std::pair<int, int>, size_t> cursor;
  std::vector<std::vector<int>> slot_dart(n);
  for (int v = 0; v < n; ++v) slot_dart[v].assign(rotations[v].size(), -1);

  std::vector<int> origin;
  std::vector<int> next;
  for (int a = 0; a < n; ++a) {
    for (int k = 0; k < static_cast<int>(rotations[a].size()); ++k) {
      if (slot_dart[a][k] >= 0) continue;
      const int b = rotations[a][k];
      int partner_vertex = b;
      int partner_slot = -1;
      if (a == b) {
        auto& cur = cursor[{a, a}];
        const auto& slots = occ[{a, a}];
        SIPOLY_CHECK(slots[cur] == k, "loop pairing out of order");
        partner_slot = slots[cur + 1];
        cur += 2;
      } else {
        auto& cur_ab = cursor[{a, b}];
        auto& cur_ba = cursor[{b, a}];
        SIPOLY_CHECK((occ[{a, b}][cur_ab] == k), "edge pairing out of order");
        partner_slot = occ[{b, a}][cur_ba];
        ++cur_ab;
        ++cur_ba;
      }
      const int d0 = static_cast<int>(origin.size());
      origin.push_back(a);
      origin.push_back(partner_vertex);
      next.push_back(-1);
      next.push_back(-1);
      slot_dart[a][k] = d0;
      slot_dart[partner_vertex][partner_slot] = d0 + 1;
    }
  }

  for (int v = 0; v < n; ++v) {
    const int deg = static_cast<int>(rotations[v].size());
    for (int k = 0; k < deg; ++k) next[slot_dart[v][k]] = slot_dart[v][(k + 1) % deg];
  }
  return CombinatorialMap(n, std::move(origin), std::move(next));
}

std::vector<VertexId> FaceSet::walk_vertices(const CombinatorialMap& map, FaceId f) const {
  std::vector<VertexId> out;
  out.reserve(walks[f].size());
  for (DartId d : walks[f]) out.push_back(map.origin(d));
  return out;
}

bool FaceSet::contains_vertex(const CombinatorialMap& map, FaceId f, VertexId v) const {
  for (DartId d : walks[f])
    if (map.origin(d) == v) return true;
  return false;
}

FaceSet trace_faces(const CombinatorialMap& map) {
  FaceSet fs;
  const int darts = map.dart_count();
  fs.face_of.assign(darts, -1);
  for (DartId d = 0; d < darts; ++d) {
    if (fs.face_of[d] >= 0) continue;
    const FaceId f = fs.size();
    std::vector<DartId> walk;
    DartId cur = d;
    do {
      fs.face_of[cur] = f;
      walk.push_back(cur);
      cur = map.face_next(cur);
    } while (cur != d);
    fs.walks.push_back(std::move(walk));
  }
  return fs;
}

bool is_connected(const CombinatorialMap& map) {
  const int n = map.vertex_count();
  std::vector<char> visited(n, 0);
  std::vector<VertexId> stack{0};
  visited[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    for (DartId d : map.darts_at(v)) {
      VertexId u = map.head(d);
      if (!visited[u]) {
        visited[u] = 1;
        ++count;
        stack.push_back(u);
      }
    }
  }
  return count == n;
}

bool euler_check(const CombinatorialMap& map) {
  if (!is_connected(map)) throw Error(ErrorKind::Disconnected, "underlying graph is disconnected");
  const int faces = trace_faces(map).size();
  return map.vertex_count() - map.edge_count() + faces == 2;
}

bool is_simple(const CombinatorialMap& map) {
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(map.edge_count());
  for (EdgeId e = 0; e < map.edge_count(); ++e) {
    auto [u, v] = map.edge_endpoints(e);
    if (u == v) return false;  // loop
    pairs.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(pairs.begin(), pairs.end());
  return std::adjacent_find(pairs.begin(), pairs.end()) == pairs.end();
}

bool connected_after_removal(const CombinatorialMap& map, std::span<const VertexId> removed) {
  const int n = map.vertex_count();
  std::vector<char> blocked(n, 0);
  for (VertexId v : removed) blocked[v] = 1;
  VertexId start = -1;
  int remaining = 0;
  for (VertexId v = 0; v < n; ++v) {
    if (!blocked[v]) {
      ++remaining;
      if (start < 0) start = v;
    }
  }
  if (remaining <= 1) return true;
  std::vector<char> visited(n, 0);
  std::vector<VertexId> stack{start};
  visited[start] = 1;
  int count = 1;
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    for (DartId d : map.darts_at(v)) {
      VertexId u = map.head(d);
      if (!blocked[u] && !visited[u]) {
        visited[u] = 1;
        ++count;
        stack.push_back(u);
      }
    }
  }
  return count == remaining;
}

bool is_cutting_set(const CombinatorialMap& map, std::span<const VertexId> removed) {
  int remaining = map.vertex_count();
  std::vector<char> blocked(map.vertex_count(), 0);
  for (VertexId v : removed) {
    if (!blocked[v]) --remaining;
    blocked[v] = 1;
  }
  if (remaining <= 1) return true;
  return !connected_after_removal(map, removed);
}

bool is_three_connected(const CombinatorialMap& map) {
  const int n = map.vertex_count();
  if (n < 4) return false;
  if (!is_connected(map)) return false;
  for (VertexId v = 0; v < n; ++v) {
    const VertexId one[] = {v};
    if (!connected_after_removal(map, one)) return false;
  }
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      const VertexId two[] = {u, v};
      if (!connected_after_removal(map, two)) return false;
    }
  }
  return true;
}

}  // namespace sipoly

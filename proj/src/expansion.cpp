#include "sipoly/expansion.hpp"

#include <algorithm>
#include <optional>

#include "sipoly/check.hpp"

namespace sipoly {

CombinatorialMap split_vertex(const CombinatorialMap& map, VertexId v, int arc_start, int arc_len) {
  const std::vector<DartId> rot = map.darts_at(v);
  const int deg = static_cast<int>(rot.size());
  SIPOLY_CHECK(arc_start >= 0 && arc_start < deg, "arc start out of range");
  SIPOLY_CHECK(arc_len >= 2 && arc_len <= deg - 2, "both arcs need at least two darts");

  std::vector<DartId> arc_a, arc_b;
  for (int i = 0; i < deg; ++i) {
    DartId d = rot[(arc_start + i) % deg];
    (i < arc_len ? arc_a : arc_b).push_back(d);
  }

  const VertexId b = map.vertex_count();
  const DartId dart_ab = map.dart_count();
  const DartId dart_ba = dart_ab + 1;

  std::vector<int> origin(map.dart_count()), next(map.dart_count());
  for (DartId d = 0; d < map.dart_count(); ++d) {
    origin[d] = map.origin(d);
    next[d] = map.next(d);
  }
  for (DartId d : arc_b) origin[d] = b;
  origin.push_back(v);
  origin.push_back(b);
  next.push_back(-1);
  next.push_back(-1);
  next[arc_a.back()] = dart_ab;
  next[dart_ab] = arc_a.front();
  next[arc_b.back()] = dart_ba;
  next[dart_ba] = arc_b.front();

  return CombinatorialMap(map.vertex_count() + 1, std::move(origin), std::move(next));
}

CombinatorialMap add_diagonal(const CombinatorialMap& map, std::span<const DartId> walk, int i,
                              int j) {
  const int m = static_cast<int>(walk.size());
  SIPOLY_CHECK(i >= 0 && i < m && j >= 0 && j < m && i != j, "walk positions out of range");
  SIPOLY_CHECK((j - i + m) % m >= 2 && (i - j + m) % m >= 2,
               "diagonal endpoints must be non-consecutive");

  const DartId di = walk[i], dj = walk[j];
  const DartId before_i = walk[(i - 1 + m) % m], before_j = walk[(j - 1 + m) % m];
  const DartId dart_xy = map.dart_count();
  const DartId dart_yx = dart_xy + 1;

  std::vector<int> origin(map.dart_count()), next(map.dart_count());
  for (DartId d = 0; d < map.dart_count(); ++d) {
    origin[d] = map.origin(d);
    next[d] = map.next(d);
  }
  origin.push_back(map.origin(di));
  origin.push_back(map.origin(dj));
  next.push_back(-1);
  next.push_back(-1);
  // Splice each new dart into the face corner it subdivides.
  next[map.twin(before_i)] = dart_xy;
  next[dart_xy] = di;
  next[map.twin(before_j)] = dart_yx;
  next[dart_yx] = dj;

  return CombinatorialMap(map.vertex_count(), std::move(origin), std::move(next));
}

namespace {

std::optional<Expansion> try_expand(const Polyhedron& p, const StrongInvolution& tau,
                                    const ExpansionMove& m, std::string* why) {
  auto fail = [&](const char* reason) -> std::optional<Expansion> {
    if (why) *why = reason;
    return std::nullopt;
  };

  if (m.vertex < 0 || m.vertex >= p.vertex_count()) return fail("vertex out of range");
  const int deg = p.degree(m.vertex);
  if (deg < 4) return fail("vertex degree below 4");
  if (m.arc_start < 0 || m.arc_start >= deg) return fail("arc start out of range");
  if (m.arc_len < 2 || m.arc_len > deg - 2) return fail("arc sizes below 2");

  const FaceId f = tau(m.vertex);
  if (p.face_size(f) < 4) return fail("image face is a triangle");
  const std::vector<VertexId>& walk = p.face_walk(f);
  const int len = static_cast<int>(walk.size());
  int i = -1, j = -1;
  for (int k = 0; k < len; ++k) {
    if (walk[k] == m.diag_x) i = k;
    if (walk[k] == m.diag_y) j = k;
  }
  if (i < 0 || j < 0) return fail("diagonal endpoint not on the image face");
  if ((j - i + len) % len < 2 || (i - j + len) % len < 2)
    return fail("diagonal endpoints are consecutive");

  CombinatorialMap after_split = split_vertex(p.map(), m.vertex, m.arc_start, m.arc_len);
  // The image face avoids its vertex (condition (2)), so its boundary
  // walk survives the split verbatim and can be reused here.
  CombinatorialMap expanded = add_diagonal(after_split, p.faces().walks[f], i, j);
  if (validate_kind(expanded).has_value()) return fail("expansion is not a polyhedron");
  Polyhedron p2 = Polyhedron::validate(expanded);

  const DartId diag_dart = after_split.dart_count();
  const FaceId half_one = p2.face_of(diag_dart);
  const FaceId half_two = p2.face_of(diag_dart + 1);
  const VertexId b = p.vertex_count();

  std::vector<FaceId> image(p2.vertex_count(), -1);
  for (VertexId u = 0; u < p.vertex_count(); ++u) {
    if (u == m.vertex) continue;
    image[u] = p2.face_of(p.faces().walks[tau(u)].front());
  }
  image[m.vertex] = m.swap_assignment ? half_two : half_one;
  image[b] = m.swap_assignment ? half_one : half_two;

  DualityIso iso{std::move(image)};
  if (!is_duality(p2, iso)) return fail("carried bijection is not a duality");
  if (!is_strong_involution(p2, iso)) return fail("no strong involution with this assignment");
  return Expansion{std::move(p2), StrongInvolution{std::move(iso)}, b};
}

}  // namespace

Expansion expand_step(const Polyhedron& p, const StrongInvolution& tau, const ExpansionMove& m) {
  std::string why;
  auto result = try_expand(p, tau, m, &why);
  if (!result) throw Error(ErrorKind::InvalidMove, why);
  return std::move(*result);
}

std::vector<std::pair<ExpansionMove, Expansion>> enumerate_expansions_with_results(
    const Polyhedron& p, const StrongInvolution& tau) {
  std::vector<std::pair<ExpansionMove, Expansion>> out;
  for (VertexId v = 0; v < p.vertex_count(); ++v) {
    const int deg = p.degree(v);
    if (deg < 4) continue;
    const FaceId f = tau(v);
    const int len = p.face_size(f);
    if (len < 4) continue;
    const std::vector<VertexId>& walk = p.face_walk(f);
    for (int i = 0; i < len; ++i) {
      for (int j = i + 2; j < len; ++j) {
        if (i == 0 && j == len - 1) continue;
        if (p.adjacent(walk[i], walk[j])) continue;
        for (int start = 0; start < deg; ++start) {
          for (int arc = 2; arc <= deg - 2; ++arc) {
            for (bool swap : {false, true}) {
              ExpansionMove m{v, start, arc, walk[i], walk[j], swap};
              if (auto result = try_expand(p, tau, m, nullptr))
                out.emplace_back(m, std::move(*result));
            }
          }
        }
      }
    }
  }
  return out;
}

std::vector<ExpansionMove> enumerate_expansions(const Polyhedron& p, const StrongInvolution& tau) {
  std::vector<ExpansionMove> out;
  for (auto& [move, result] : enumerate_expansions_with_results(p, tau)) out.push_back(move);
  return out;
}

}  // namespace sipoly

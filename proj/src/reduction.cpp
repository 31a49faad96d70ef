#include "sipoly/reduction.hpp"

#include <algorithm>

#include "sipoly/check.hpp"

namespace sipoly {

namespace {

// New dart id after dropping the pair {2e, 2e+1}.
inline DartId shift_dart(DartId d, EdgeId e) { return d < 2 * e ? d : d - 2; }

std::vector<VertexId> mapped_sorted_vertices(const std::vector<VertexId>& verts,
                                             const std::vector<VertexId>& vmap) {
  std::vector<VertexId> out;
  out.reserve(verts.size());
  for (VertexId v : verts) out.push_back(vmap[v]);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

FaceId face_with_vertex_set(const Polyhedron& p, const std::vector<VertexId>& sorted_set) {
  for (FaceId f = 0; f < p.face_count(); ++f)
    if (p.face_vertices(f) == sorted_set) return f;
  SIPOLY_CHECK(false, "no face with the expected vertex set");
  return -1;
}

}  // namespace

CombinatorialMap delete_edge(const CombinatorialMap& map, EdgeId e) {
  const int darts = map.dart_count();
  const DartId d0 = 2 * e, d1 = 2 * e + 1;
  std::vector<int> origin, next;
  origin.reserve(darts - 2);
  next.reserve(darts - 2);
  for (DartId d = 0; d < darts; ++d) {
    if (d == d0 || d == d1) continue;
    DartId s = map.next(d);
    while (s == d0 || s == d1) s = map.next(s);
    origin.push_back(map.origin(d));
    next.push_back(shift_dart(s, e));
  }
  return CombinatorialMap(map.vertex_count(), std::move(origin), std::move(next));
}

CombinatorialMap delete_edge(const Polyhedron& p, EdgeId e) { return delete_edge(p.map(), e); }

Contraction contract_edge(const CombinatorialMap& map, EdgeId e) {
  auto [eu, ev] = map.edge_endpoints(e);
  SIPOLY_CHECK(eu != ev, "cannot contract a loop");
  const VertexId keep = std::min(eu, ev);
  const VertexId gone = std::max(eu, ev);
  const DartId d_keep = map.origin(2 * e) == keep ? 2 * e : 2 * e + 1;
  const DartId d_gone = map.twin(d_keep);

  // Merged rotation: keep's darts after d_keep, then gone's after d_gone.
  std::vector<DartId> chain;
  for (DartId d = map.next(d_keep); d != d_keep; d = map.next(d)) chain.push_back(d);
  for (DartId d = map.next(d_gone); d != d_gone; d = map.next(d)) chain.push_back(d);
  SIPOLY_CHECK(!chain.empty(), "contraction would isolate the merged vertex");

  std::vector<VertexId> vmap(map.vertex_count());
  for (VertexId v = 0; v < map.vertex_count(); ++v)
    vmap[v] = v == gone ? keep : (v > gone ? v - 1 : v);

  const int darts = map.dart_count();
  std::vector<int> origin(darts - 2), next(darts - 2);
  for (DartId d = 0; d < darts; ++d) {
    if (d == 2 * e || d == 2 * e + 1) continue;
    origin[shift_dart(d, e)] = vmap[map.origin(d)];
  }
  for (DartId d = 0; d < darts; ++d) {
    if (d == 2 * e || d == 2 * e + 1) continue;
    VertexId o = map.origin(d);
    if (o != keep && o != gone) next[shift_dart(d, e)] = shift_dart(map.next(d), e);
  }
  for (size_t i = 0; i < chain.size(); ++i)
    next[shift_dart(chain[i], e)] = shift_dart(chain[(i + 1) % chain.size()], e);

  return Contraction{CombinatorialMap(map.vertex_count() - 1, std::move(origin), std::move(next)),
                     keep, std::move(vmap)};
}

Contraction contract_edge(const Polyhedron& p, EdgeId e) { return contract_edge(p.map(), e); }

bool can_delete(const Polyhedron& p, EdgeId e) {
  return !validate_kind(delete_edge(p, e)).has_value();
}

bool can_contract(const Polyhedron& p, EdgeId e) {
  return !validate_kind(contract_edge(p, e).map).has_value();
}

bool is_essential(const Polyhedron& p, EdgeId e) { return !can_delete(p, e) && !can_contract(p, e); }

EdgeFlags edge_flags(const Polyhedron& p, EdgeId e, const StrongInvolution* tau) {
  EdgeFlags flags;
  auto [f, g] = p.edge_faces(e);
  flags.on_triangle = p.face_size(f) == 3 || p.face_size(g) == 3;

  auto [a, b] = p.map().edge_endpoints(e);
  for (VertexId c = 0; c < p.vertex_count() && !flags.in_three_cut; ++c) {
    if (c == a || c == b) continue;
    const VertexId three[] = {a, b, c};
    flags.in_three_cut = is_cutting_set(p.map(), three);
  }

  flags.diameter = tau != nullptr && is_diameter(p, *tau, e);
  return flags;
}

std::vector<EdgeId> find_reducible_edges(const Polyhedron& p, const StrongInvolution& tau) {
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < p.edge_count(); ++e)
    if (!edge_flags(p, e, &tau).any()) out.push_back(e);
  return out;
}

ReduceStep reduce_step(const Polyhedron& p, const StrongInvolution& tau, EdgeId e) {
  if (edge_flags(p, e, &tau).any())
    throw Error(ErrorKind::NotReducible,
                "edge " + std::to_string(e) + " is on a triangle, in a 3-cut, or a diameter");

  auto [a, b] = p.map().edge_endpoints(e);
  const EdgeId te = tau_edge(p, tau, e);
  auto [x, y] = p.map().edge_endpoints(te);

  Contraction c = contract_edge(p, e);
  SIPOLY_CHECK(is_simple(c.map), "contraction of a non-triangle edge left parallel edges");

  // Locate the image of the tau edge in the contracted map.
  EdgeId te_new = -1;
  for (DartId d : c.map.darts_at(c.vertex_map[x]))
    if (c.map.head(d) == c.vertex_map[y]) {
      SIPOLY_CHECK(te_new < 0, "duplicate image of the deleted edge");
      te_new = c.map.edge_of(d);
    }
  SIPOLY_CHECK(te_new >= 0, "deleted edge lost by contraction");

  Polyhedron reduced = Polyhedron::validate(delete_edge(c.map, te_new));

  // Carry the involution across: faces keep their vertex sets up to the
  // relabeling, except tau(a) and tau(b) which merge.
  std::vector<FaceId> image(reduced.vertex_count(), -1);
  for (VertexId u = 0; u < p.vertex_count(); ++u) {
    if (u == a || u == b) continue;
    image[c.vertex_map[u]] =
        face_with_vertex_set(reduced, mapped_sorted_vertices(p.face_walk(tau(u)), c.vertex_map));
  }
  std::vector<VertexId> merged_union = p.face_walk(tau(a));
  const auto& fb = p.face_walk(tau(b));
  merged_union.insert(merged_union.end(), fb.begin(), fb.end());
  image[c.merged_vertex] =
      face_with_vertex_set(reduced, mapped_sorted_vertices(merged_union, c.vertex_map));

  StrongInvolution tau2{DualityIso{std::move(image)}};
  SIPOLY_CHECK(is_duality(reduced, tau2.iso), "carried involution is not a duality");
  SIPOLY_CHECK(is_strong_involution(reduced, tau2.iso),
               "carried involution is not a strong involution");

  return ReduceStep{std::move(reduced), std::move(tau2), c.merged_vertex, std::move(c.vertex_map)};
}

ReductionTrace reduce_to_wheel(const Polyhedron& p, const StrongInvolution& tau) {
  Polyhedron cur = p;
  StrongInvolution cur_tau = tau;
  std::vector<ReductionStepRecord> steps;

  while (!is_wheel(cur)) {
    std::vector<EdgeId> reducible = find_reducible_edges(cur, cur_tau);
    SIPOLY_CHECK(!reducible.empty(), "non-wheel with no reducible edge");

    const std::vector<int> label = canonical_form(cur.map()).vertex_label;
    auto key = [&](EdgeId e) {
      auto [u, v] = cur.map().edge_endpoints(e);
      return std::make_pair(std::min(label[u], label[v]), std::max(label[u], label[v]));
    };
    EdgeId pick = *std::min_element(reducible.begin(), reducible.end(),
                                    [&](EdgeId l, EdgeId r) { return key(l) < key(r); });

    auto [a, b] = cur.map().edge_endpoints(pick);
    auto [x, y] = cur.map().edge_endpoints(tau_edge(cur, cur_tau, pick));
    ReduceStep step = reduce_step(cur, cur_tau, pick);
    steps.push_back(ReductionStepRecord{{a, b}, {x, y}, canonical_code(step.polyhedron)});
    cur = std::move(step.polyhedron);
    cur_tau = std::move(step.involution);
  }

  const int rim = cur.vertex_count() - 1;
  return ReductionTrace{std::move(steps), rim, std::move(cur), std::move(cur_tau)};
}

}  // namespace sipoly

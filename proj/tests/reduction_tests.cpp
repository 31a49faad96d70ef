#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "helpers.hpp"
#include "sipoly/expansion.hpp"
#include "sipoly/reduction.hpp"

using namespace sipoly;
using namespace testutil;

namespace {

Polyhedron k4() { return Polyhedron::validate(build_map(k4_rotations())); }

Polyhedron octahedron() { return dual(cube()).polyhedron; }

// A 7-vertex strongly involutive polyhedron obtained by expanding
// wheel(5); used as the smallest non-wheel reduction input.
std::pair<Polyhedron, StrongInvolution> seven_vertex_example() {
  Polyhedron w5 = wheel(5);
  StrongInvolution tau = strong_involutions(w5).front();
  auto results = enumerate_expansions_with_results(w5, tau);
  REQUIRE_FALSE(results.empty());
  return {results.front().second.polyhedron, results.front().second.involution};
}

}  // namespace

TEST_CASE("delete_edge breaks 3-connectivity on small examples") {
  Polyhedron p = k4();
  for (EdgeId e = 0; e < p.edge_count(); ++e)
    CHECK_FALSE(is_three_connected(delete_edge(p, e)));

  Polyhedron c = cube();
  for (EdgeId e = 0; e < c.edge_count(); ++e) {
    CombinatorialMap m = delete_edge(c, e);
    CHECK(is_simple(m));
    CHECK(euler_check(m));
    CHECK_FALSE(is_three_connected(m));
  }

  Polyhedron w5 = wheel(5);
  EdgeId rim = *w5.edge_between(1, 2);
  CHECK(validate_kind(delete_edge(w5, rim)) == ErrorKind::NotThreeConnected);
}

TEST_CASE("delete_edge merges the two incident faces") {
  Polyhedron c = cube();
  CombinatorialMap m = delete_edge(c, 0);
  FaceSet fs = trace_faces(m);
  CHECK(fs.size() == c.face_count() - 1);
}

TEST_CASE("contract_edge splices rotations") {
  Polyhedron c = cube();
  for (EdgeId e = 0; e < c.edge_count(); ++e) {
    Contraction r = contract_edge(c, e);
    CHECK(r.map.vertex_count() == 7);
    CHECK(r.map.edge_count() == 11);
    CHECK_FALSE(validate_kind(r.map).has_value());
  }

  // Contracting a triangle edge leaves parallel edges.
  Polyhedron p = k4();
  for (EdgeId e = 0; e < p.edge_count(); ++e)
    CHECK(validate_kind(contract_edge(p, e).map) == ErrorKind::NotSimple);

  Polyhedron w5 = wheel(5);
  EdgeId spoke = *w5.edge_between(0, 1);
  CHECK(validate_kind(contract_edge(w5, spoke).map) == ErrorKind::NotSimple);
}

TEST_CASE("can_delete and can_contract on dual pairs") {
  Polyhedron p = k4();
  for (EdgeId e = 0; e < p.edge_count(); ++e) {
    CHECK_FALSE(can_delete(p, e));
    CHECK_FALSE(can_contract(p, e));
  }
  Polyhedron c = cube();
  for (EdgeId e = 0; e < c.edge_count(); ++e) {
    CHECK_FALSE(can_delete(c, e));
    CHECK(can_contract(c, e));
  }
  Polyhedron oct = octahedron();
  for (EdgeId e = 0; e < oct.edge_count(); ++e) {
    CHECK(can_delete(oct, e));
    CHECK_FALSE(can_contract(oct, e));
  }
}

TEST_CASE("deletion and contraction swap under duality") {
  for (const Polyhedron& p : {cube(), wheel(6), octahedron()}) {
    DualResult d = dual(p);
    for (EdgeId e = 0; e < p.edge_count(); ++e) {
      CHECK(can_delete(p, e) == can_contract(d.polyhedron, d.edge_map[e]));
      CHECK(can_contract(p, e) == can_delete(d.polyhedron, d.edge_map[e]));
    }
  }
}

TEST_CASE("is_essential") {
  for (int n : {3, 4, 5, 6}) {
    Polyhedron w = wheel(n);
    for (EdgeId e = 0; e < w.edge_count(); ++e) CHECK(is_essential(w, e));
  }
  Polyhedron c = cube();
  for (EdgeId e = 0; e < c.edge_count(); ++e) CHECK_FALSE(is_essential(c, e));
}

TEST_CASE("edge_flags on wheel(5)") {
  Polyhedron w5 = wheel(5);
  StrongInvolution tau = strong_involutions(w5).front();
  EdgeFlags spoke = edge_flags(w5, *w5.edge_between(0, 1), &tau);
  CHECK(spoke.on_triangle);
  CHECK(spoke.diameter);
  EdgeFlags rim = edge_flags(w5, *w5.edge_between(1, 2), &tau);
  CHECK(rim.on_triangle);
  CHECK_FALSE(rim.diameter);
}

TEST_CASE("edge_flags on K4 sets all three") {
  Polyhedron p = k4();
  StrongInvolution tau = strong_involutions(p).front();
  for (EdgeId e = 0; e < p.edge_count(); ++e) {
    EdgeFlags flags = edge_flags(p, e, &tau);
    CHECK(flags.on_triangle);
    CHECK(flags.in_three_cut);
    CHECK(flags.diameter);
  }
}

TEST_CASE("edge_flags without an involution leaves the diameter flag clear") {
  Polyhedron c = cube();
  EdgeFlags flags = edge_flags(c, 0);
  CHECK_FALSE(flags.on_triangle);
  CHECK_FALSE(flags.diameter);
}

TEST_CASE("wheels have no reducible edges") {
  for (int n : {3, 5, 7}) {
    Polyhedron w = wheel(n);
    StrongInvolution tau = strong_involutions(w).front();
    CHECK(find_reducible_edges(w, tau).empty());
  }
}

TEST_CASE("reduce_step inverts an expansion of wheel(5)") {
  auto [p, tau] = seven_vertex_example();
  CHECK(p.vertex_count() == 7);
  CHECK(p.edge_count() == 12);
  CHECK(p.face_count() == 7);

  std::vector<EdgeId> reducible = find_reducible_edges(p, tau);
  REQUIRE_FALSE(reducible.empty());
  ReduceStep step = reduce_step(p, tau, reducible.front());
  CHECK(step.polyhedron.vertex_count() == 6);
  CHECK(step.polyhedron.edge_count() == 10);
  CHECK(step.polyhedron.face_count() == 6);
  CHECK(are_isomorphic(step.polyhedron, wheel(5)));
  CHECK(is_strong_involution(step.polyhedron, step.involution.iso));
}

TEST_CASE("reduce_step rejects flagged edges") {
  Polyhedron w5 = wheel(5);
  StrongInvolution tau = strong_involutions(w5).front();
  CHECK_THROWS_AS(reduce_step(w5, tau, 0), Error);
}

TEST_CASE("reduce_to_wheel on wheels is trivial") {
  for (int n : {3, 7}) {
    Polyhedron w = wheel(n);
    StrongInvolution tau = strong_involutions(w).front();
    ReductionTrace trace = reduce_to_wheel(w, tau);
    CHECK(trace.steps.empty());
    CHECK(trace.terminal_rim == n);
  }
}

TEST_CASE("reduce_to_wheel from a 7-vertex example ends at wheel(5)") {
  auto [p, tau] = seven_vertex_example();
  ReductionTrace trace = reduce_to_wheel(p, tau);
  CHECK(trace.steps.size() == 1);
  CHECK(trace.terminal_rim == 5);
  CHECK(trace.terminal_rim % 2 == 1);
  CHECK(is_wheel(trace.terminal));
}

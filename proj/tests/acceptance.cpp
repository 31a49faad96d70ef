// Acceptance suite: end-to-end checks of the classification machinery,
// one printed line per criterion.  Returns nonzero when any criterion
// fails.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "json.hpp"
#include "sipoly/census.hpp"
#include "sipoly/duality.hpp"
#include "sipoly/expansion.hpp"
#include "sipoly/io.hpp"
#include "sipoly/reduction.hpp"
#include "sipoly/squares.hpp"

using namespace sipoly;

namespace {

int failures = 0;

void criterion(int n, const char* desc, bool ok) {
  std::printf("[%s] criterion %d: %s\n", ok ? "PASS" : "FAIL", n, desc);
  std::fflush(stdout);
  if (!ok) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// Strongly involutive members with their involutions, from the
// generate-and-filter side.
std::vector<std::pair<Polyhedron, StrongInvolution>> strongly_involutive_members(
    const std::vector<Polyhedron>& all) {
  std::vector<std::pair<Polyhedron, StrongInvolution>> members;
  for (const Polyhedron& p : all) {
    if (p.vertex_count() != p.face_count()) continue;
    std::vector<StrongInvolution> sis = strong_involutions(p);
    if (!sis.empty()) members.emplace_back(p, sis.front());
  }
  return members;
}

std::vector<std::vector<int>> factorial_strong_involutions(const Polyhedron& p) {
  std::vector<std::vector<int>> found;
  const int n = p.vertex_count();
  if (p.face_count() != n) return found;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool duality = true;
    for (int u = 0; u < n && duality; ++u)
      for (int v = u + 1; v < n && duality; ++v)
        duality = p.adjacent(u, v) == p.faces_adjacent(perm[u], perm[v]);
    if (!duality) continue;
    bool strong = true;
    for (int v = 0; v < n && strong; ++v) strong = !p.face_contains(perm[v], v);
    for (int u = 0; u < n && strong; ++u)
      for (int v = u + 1; v < n && strong; ++v)
        strong = p.face_contains(perm[v], u) == p.face_contains(perm[u], v);
    if (strong) found.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::sort(found.begin(), found.end());
  return found;
}

}  // namespace

int main() {
  const auto t0 = std::chrono::steady_clock::now();

  // --- criterion 1: the two census generators agree at V <= 9 -------------
  Census expand9 = si_census_expand(9);
  Census oracle9 = si_census_oracle(9);
  CensusDiff diff = compare_censuses(expand9, oracle9);
  const double census_time = seconds_since(t0);
  {
    bool ok = diff.empty() && census_time < 600.0;
    criterion(1, "expansion census equals generate-and-filter census at V <= 9", ok);
    if (!diff.empty()) std::printf("%s", diff.report().c_str());
    std::printf("       census cross-check took %.1fs; per-V counts:", census_time);
    for (int v = 4; v <= 9; ++v) {
      auto it = oracle9.by_v.find(v);
      std::printf(" %d", it == oracle9.by_v.end() ? 0 : static_cast<int>(it->second.size()));
    }
    std::printf("\n");
  }

  // Shared member list (polyhedron + involution) for the later criteria.
  std::vector<Polyhedron> all9 = enumerate_polyhedra(9, 16);
  std::vector<std::pair<Polyhedron, StrongInvolution>> members = strongly_involutive_members(all9);

  // --- criterion 2: unique strong involution per member --------------------
  {
    bool ok = members.size() == static_cast<size_t>(oracle9.total()) && !members.empty();
    for (const auto& [p, tau] : members) {
      int strong = 0;
      for (const DualityIso& d : find_dualities(p)) strong += is_strong_involution(p, d);
      if (strong != 1) ok = false;
    }
    criterion(2, "every member has exactly one strong involution among all dualities", ok);
  }

  // --- criterion 3: reducible edges exist off wheels; reductions end odd ---
  {
    bool ok = true;
    for (const auto& [p, tau] : members) {
      std::vector<EdgeId> reducible = find_reducible_edges(p, tau);
      if (is_wheel(p)) {
        if (!reducible.empty()) ok = false;
      } else if (reducible.empty()) {
        ok = false;
      }
      try {
        ReductionTrace trace = reduce_to_wheel(p, tau);
        if (trace.terminal_rim % 2 != 1 || !is_wheel(trace.terminal)) ok = false;
      } catch (const std::exception&) {
        ok = false;
      }
    }
    criterion(3, "non-wheels have reducible edges; reductions end at odd wheels", ok);
  }

  // --- criterion 4: every remove-contract step lands in the class ---------
  {
    bool ok = true;
    for (const auto& [p, tau] : members) {
      Polyhedron cur = p;
      StrongInvolution cur_tau = tau;
      while (!is_wheel(cur) && ok) {
        std::vector<EdgeId> reducible = find_reducible_edges(cur, cur_tau);
        if (reducible.empty()) {
          ok = false;
          break;
        }
        for (EdgeId e : reducible) {
          try {
            ReduceStep step = reduce_step(cur, cur_tau, e);
            ok = ok && step.polyhedron.vertex_count() == cur.vertex_count() - 1 &&
                 step.polyhedron.edge_count() == cur.edge_count() - 2 &&
                 step.polyhedron.face_count() == cur.face_count() - 1 &&
                 is_strong_involution(step.polyhedron, step.involution.iso);
          } catch (const std::exception&) {
            ok = false;
          }
        }
        ReduceStep step = reduce_step(cur, cur_tau, reducible.front());
        cur = std::move(step.polyhedron);
        cur_tau = std::move(step.involution);
      }
    }
    criterion(4, "each step yields a strongly involutive polyhedron with (V-1, E-2, F-1)", ok);
  }

  // --- criterion 5: diameter structure -------------------------------------
  {
    const CanonicalCode k4_code = canonical_code(wheel(3));
    bool ok = true;
    for (const auto& [p, tau] : members) {
      for (EdgeId e = 0; e < p.edge_count(); ++e) {
        EdgeId image = tau_edge(p, tau, e);
        bool d1 = is_diameter(p, tau, e);
        bool d2 = is_diameter(p, tau, image);
        if (d1 && d2) {
          if (canonical_code(p) != k4_code) ok = false;
        } else if (d1 && !d2) {
          auto [a, b] = p.map().edge_endpoints(e);
          auto [x, y] = p.map().edge_endpoints(image);
          const VertexId cut_x[] = {a, b, x};
          const VertexId cut_y[] = {a, b, y};
          if (connected_after_removal(p.map(), cut_x)) ok = false;
          if (connected_after_removal(p.map(), cut_y)) ok = false;
        }
      }
    }
    criterion(5, "double diameters only on K4; half diameters give 3-cuts", ok);
  }

  // --- criterion 6: the three wheel characterizations agree ----------------
  std::vector<Polyhedron> all8 = enumerate_polyhedra(8, 18);
  {
    bool ok = true;
    for (const Polyhedron& p : all8) {
      bool structural = is_wheel(p);
      bool essential = true;
      for (EdgeId e = 0; e < p.edge_count() && essential; ++e) essential = is_essential(p, e);
      bool local = true;
      for (EdgeId e = 0; e < p.edge_count() && local; ++e) {
        auto [f, g] = p.edge_faces(e);
        bool triangle = p.face_size(f) == 3 || p.face_size(g) == 3;
        auto [u, v] = p.map().edge_endpoints(e);
        local = triangle && (p.degree(u) == 3 || p.degree(v) == 3);
      }
      if (structural != essential || essential != local) ok = false;
    }
    criterion(6, "wheel = all edges essential = triangle with a degree-3 endpoint (V <= 8)", ok);
  }

  // --- criterion 7: the square graph and its induced involution ------------
  {
    bool ok = true;
    for (const auto& [p, tau] : members) {
      try {
        SquareGraph sq = graph_of_squares(p);
        if (sq.graph.face_count() != 2 * p.edge_count()) ok = false;
        for (FaceId f = 0; f < sq.graph.face_count(); ++f)
          if (sq.graph.face_size(f) != 4) ok = false;
        CellMap cm = induced_cell_map(p, tau, sq);
        if (!is_automorphism(sq, cm) || !is_involution(cm) || !is_fixed_point_free(sq, cm))
          ok = false;
      } catch (const std::exception&) {
        ok = false;
      }
    }
    criterion(7, "square graphs are all-quadrilateral with a fixed-point-free induced involution",
              ok);
  }

  // --- criterion 8: every reduction step can be expanded back --------------
  {
    bool ok = true;
    for (const auto& [p, tau] : members) {
      const CanonicalCode original = canonical_code(p);
      for (EdgeId e : find_reducible_edges(p, tau)) {
        ReduceStep step = reduce_step(p, tau, e);
        bool recovered = false;
        for (const auto& [move, expansion] :
             enumerate_expansions_with_results(step.polyhedron, step.involution)) {
          if (canonical_code(expansion.polyhedron) == original) {
            recovered = true;
            break;
          }
        }
        if (!recovered) ok = false;
      }
    }
    criterion(8, "every reduce step is inverted by some enumerated expansion", ok);
  }

  // --- criterion 9: polyhedron counts against the frozen golden values -----
  {
    const std::map<int, int> expected{{4, 1}, {5, 2}, {6, 7}, {7, 34}, {8, 257}};
    std::map<int, int> got;
    for (const Polyhedron& p : all8) got[p.vertex_count()]++;
    bool ok = got == expected;

    std::ifstream golden(std::string(SIPOLY_SOURCE_DIR) + "/data/golden/polyhedron_counts.json");
    ok = ok && golden.good();
    if (golden.good()) {
      nlohmann::json doc = nlohmann::json::parse(golden);
      for (const auto& [v, count] : expected)
        if (doc["counts_by_v"][std::to_string(v)].get<int>() != count) ok = false;
    }
    criterion(9, "polyhedron counts by V are 1, 2, 7, 34, 257 and match the golden file", ok);
  }

  // --- criterion 10: kernel property suite ----------------------------------
  {
    const auto t10 = std::chrono::steady_clock::now();
    bool ok = true;

    std::vector<Polyhedron> family;
    for (int n = 3; n <= 8; ++n) family.push_back(wheel(n));
    for (const Polyhedron& p : enumerate_polyhedra(6, 12)) family.push_back(p);

    for (const Polyhedron& p : family) {
      if (!are_isomorphic(p, dual(dual(p).polyhedron).polyhedron)) ok = false;
      if (!euler_check(p.map())) ok = false;
      int face_sum = 0, degree_sum = 0;
      for (FaceId f = 0; f < p.face_count(); ++f) face_sum += p.face_size(f);
      for (VertexId v = 0; v < p.vertex_count(); ++v) degree_sum += p.degree(v);
      if (face_sum != 2 * p.edge_count() || degree_sum != 2 * p.edge_count()) ok = false;
    }

    // Exhaustive bijection filter agrees with the pruned search on
    // every polyhedron with at most 8 vertices.
    for (const Polyhedron& p : all8) {
      std::vector<std::vector<int>> expected = factorial_strong_involutions(p);
      std::vector<std::vector<int>> actual;
      for (const StrongInvolution& tau : strong_involutions(p))
        actual.push_back(tau.iso.vertex_to_face);
      std::sort(actual.begin(), actual.end());
      if (actual != expected) ok = false;
    }

    const double dt = seconds_since(t10);
    ok = ok && dt < 120.0;
    std::printf("       kernel property suite took %.1fs\n", dt);
    criterion(10, "duality involution, Euler, sum identities, brute-force equivalence", ok);
  }

  std::printf("%d of 10 criteria passed\n", 10 - failures);
  return failures == 0 ? 0 : 1;
}

#include "sipoly/duality.hpp"

#include <algorithm>
#include <numeric>

#include "sipoly/check.hpp"

namespace sipoly {

bool is_duality(const Polyhedron& p, const DualityIso& d) {
  const int n = p.vertex_count();
  if (static_cast<int>(d.vertex_to_face.size()) != n || p.face_count() != n) return false;
  std::vector<char> used(n, 0);
  for (FaceId f : d.vertex_to_face) {
    if (f < 0 || f >= n || used[f]) return false;
    used[f] = 1;
  }
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = u + 1; v < n; ++v)
      if (p.adjacent(u, v) != p.faces_adjacent(d(u), d(v))) return false;
  return true;
}

namespace {

struct DualitySearch {
  const Polyhedron& p;
  int n;
  std::vector<VertexId> order;        // assignment order
  std::vector<FaceId> image;          // per vertex, -1 unassigned
  std::vector<char> face_used;
  std::vector<DualityIso> results;

  explicit DualitySearch(const Polyhedron& poly) : p(poly), n(poly.vertex_count()) {
    image.assign(n, -1);
    face_used.assign(n, 0);

    // Highest degree first, then prefer vertices with many already
    // ordered neighbors so the adjacency constraints bind early.
    std::vector<char> placed(n, 0);
    for (int i = 0; i < n; ++i) {
      VertexId best = -1;
      int best_key = -1;
      for (VertexId v = 0; v < n; ++v) {
        if (placed[v]) continue;
        int anchored = 0;
        for (VertexId w : p.map().neighbors(v)) anchored += placed[w];
        int key = (i == 0 ? p.degree(v) : anchored * n + p.degree(v));
        if (key > best_key) {
          best_key = key;
          best = v;
        }
      }
      placed[best] = 1;
      order.push_back(best);
    }
  }

  void run(size_t pos) {
    if (pos == order.size()) {
      results.push_back(DualityIso{image});
      return;
    }
    VertexId v = order[pos];
    for (FaceId f = 0; f < n; ++f) {
      if (face_used[f] || p.face_size(f) != p.degree(v)) continue;
      bool ok = true;
      for (size_t i = 0; i < pos && ok; ++i) {
        VertexId w = order[i];
        ok = p.adjacent(v, w) == p.faces_adjacent(f, image[w]);
      }
      if (!ok) continue;
      image[v] = f;
      face_used[f] = 1;
      run(pos + 1);
      image[v] = -1;
      face_used[f] = 0;
    }
  }
};

}  // namespace

std::vector<DualityIso> find_dualities(const Polyhedron& p) {
  if (p.vertex_count() != p.face_count()) return {};
  DualitySearch search(p);
  search.run(0);
  std::sort(search.results.begin(), search.results.end(),
            [](const DualityIso& a, const DualityIso& b) {
              return a.vertex_to_face < b.vertex_to_face;
            });
  return search.results;
}

bool is_strong_involution(const Polyhedron& p, const DualityIso& d) {
  const int n = p.vertex_count();
  for (VertexId v = 0; v < n; ++v)
    if (p.face_contains(d(v), v)) return false;
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = u + 1; v < n; ++v)
      if (p.face_contains(d(v), u) != p.face_contains(d(u), v)) return false;
  return true;
}

std::vector<StrongInvolution> strong_involutions(const Polyhedron& p) {
  std::vector<StrongInvolution> out;
  for (DualityIso& d : find_dualities(p))
    if (is_strong_involution(p, d)) out.push_back(StrongInvolution{std::move(d)});
  return out;
}

EdgeId tau_edge(const Polyhedron& p, const StrongInvolution& tau, EdgeId e) {
  auto [a, b] = p.map().edge_endpoints(e);
  auto shared = p.edge_between_faces(tau(a), tau(b));
  SIPOLY_CHECK(shared.has_value(), "image faces of adjacent vertices share no edge");
  return *shared;
}

bool is_diameter(const Polyhedron& p, const StrongInvolution& tau, EdgeId e) {
  auto [a, b] = p.map().edge_endpoints(e);
  return p.face_contains(tau(b), a);
}

}  // namespace sipoly

#pragma once

// Shared builders and independent test oracles.  Everything here stays
// deliberately naive: the oracles must not share code paths with the
// library routines they cross-check.

#include <algorithm>
#include <functional>
#include <numeric>
#include <vector>

#include "sipoly/duality.hpp"
#include "sipoly/embed.hpp"
#include "sipoly/map.hpp"
#include "sipoly/polyhedron.hpp"

namespace testutil {

using namespace sipoly;

inline std::vector<std::vector<int>> k4_rotations() {
  return {{1, 2, 3}, {0, 3, 2}, {0, 1, 3}, {0, 2, 1}};
}

inline std::vector<std::vector<int>> cycle_rotations(int n) {
  std::vector<std::vector<int>> rot(n);
  for (int i = 0; i < n; ++i) rot[i] = {(i + 1) % n, (i + n - 1) % n};
  return rot;
}

inline std::vector<std::vector<int>> k5_rotations() {
  std::vector<std::vector<int>> rot(5);
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j)
      if (i != j) rot[i].push_back(j);
  return rot;
}

inline std::vector<std::vector<int>> cube_adjacency() {
  std::vector<std::vector<int>> adj(8);
  for (int v = 0; v < 8; ++v)
    for (int bit = 0; bit < 3; ++bit) adj[v].push_back(v ^ (1 << bit));
  return adj;
}

inline Polyhedron cube() {
  return Polyhedron::validate(build_map(embed_planar(cube_adjacency())));
}

inline std::vector<std::vector<int>> prism_adjacency(int n) {
  std::vector<std::vector<int>> adj(2 * n);
  for (int i = 0; i < n; ++i) {
    int j = (i + 1) % n;
    adj[i].push_back(j);
    adj[j].push_back(i);
    adj[n + i].push_back(n + j);
    adj[n + j].push_back(n + i);
    adj[i].push_back(n + i);
    adj[n + i].push_back(i);
  }
  return adj;
}

inline CombinatorialMap relabel(const CombinatorialMap& map, const std::vector<int>& perm) {
  std::vector<std::vector<int>> rot(map.vertex_count());
  auto old_rot = map.rotations();
  for (int v = 0; v < map.vertex_count(); ++v) {
    for (int u : old_rot[v]) rot[perm[v]].push_back(perm[u]);
  }
  return build_map(rot);
}

inline CombinatorialMap mirror(const CombinatorialMap& map) {
  auto rot = map.rotations();
  for (auto& list : rot) std::reverse(list.begin(), list.end());
  return build_map(rot);
}

// --- independent oracles -------------------------------------------------

// Vertex connectivity >= 3 via unit-capacity max flow with split
// vertices (Menger), checked over all non-adjacent pairs.
inline bool menger_three_connected(const CombinatorialMap& map) {
  const int n = map.vertex_count();
  if (n < 4) return false;
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  for (EdgeId e = 0; e < map.edge_count(); ++e) {
    auto [u, v] = map.edge_endpoints(e);
    if (u == v) continue;
    adj[u][v] = adj[v][u] = 1;
  }
  if (!is_connected(map)) return false;

  const int big = 1000000;
  auto flow_at_least_3 = [&](int s, int t) {
    // Nodes: 2v = in, 2v+1 = out.
    const int nn = 2 * n;
    std::vector<std::vector<int>> cap(nn, std::vector<int>(nn, 0));
    for (int v = 0; v < n; ++v) cap[2 * v][2 * v + 1] = (v == s || v == t) ? big : 1;
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v)
        if (adj[u][v]) cap[2 * u + 1][2 * v] = big;
    int flow = 0;
    while (flow < 3) {
      std::vector<int> parent(nn, -1);
      std::vector<int> queue{2 * s + 1};
      parent[2 * s + 1] = 2 * s + 1;
      for (size_t qi = 0; qi < queue.size() && parent[2 * t] < 0; ++qi) {
        int x = queue[qi];
        for (int y = 0; y < nn; ++y)
          if (cap[x][y] > 0 && parent[y] < 0) {
            parent[y] = x;
            queue.push_back(y);
          }
      }
      if (parent[2 * t] < 0) break;
      for (int y = 2 * t; y != 2 * s + 1; y = parent[y]) {
        cap[parent[y]][y] -= 1;
        cap[y][parent[y]] += 1;
      }
      ++flow;
    }
    return flow >= 3;
  };

  bool complete = true;
  for (int u = 0; u < n && complete; ++u)
    for (int v = u + 1; v < n && complete; ++v)
      if (!adj[u][v]) complete = false;
  if (complete) return true;

  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!adj[u][v] && !flow_at_least_3(u, v)) return false;
  return true;
}

// Graph isomorphism by backtracking over vertex bijections.  For
// polyhedra this equals map isomorphism up to reflection (embeddings of
// 3-connected planar graphs are unique).
inline bool brute_force_isomorphic(const Polyhedron& p, const Polyhedron& q) {
  const int n = p.vertex_count();
  if (n != q.vertex_count() || p.edge_count() != q.edge_count()) return false;

  std::vector<int> image(n, -1);
  std::vector<char> used(n, 0);
  auto degrees_match = [&](int v, int w) { return p.degree(v) == q.degree(w); };

  std::function<bool(int)> place = [&](int v) -> bool {
    if (v == n) return true;
    for (int w = 0; w < n; ++w) {
      if (used[w] || !degrees_match(v, w)) continue;
      bool ok = true;
      for (int u = 0; u < v && ok; ++u) ok = p.adjacent(v, u) == q.adjacent(w, image[u]);
      if (!ok) continue;
      image[v] = w;
      used[w] = 1;
      if (place(v + 1)) return true;
      image[v] = -1;
      used[w] = 0;
    }
    return false;
  };
  return place(0);
}

// Strong involutions by filtering every vertex -> face bijection.
inline std::vector<std::vector<int>> factorial_strong_involutions(const Polyhedron& p) {
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

}  // namespace testutil

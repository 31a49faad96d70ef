#include "sipoly/embed.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "sipoly/check.hpp"

namespace sipoly {

namespace {

// A face under construction: closed directed vertex walk, stored open.
using Walk = std::vector<int>;

struct Fragment {
  std::vector<int> attachments;      // sorted H-vertices
  std::vector<int> interior;        // component vertices (empty for chords)
  int chord_u = -1, chord_v = -1;   // set when the fragment is a single edge
  std::vector<int> admissible;      // face ids
};

struct BlockEmbedder {
  const std::vector<std::vector<int>>& adj;  // block-local adjacency
  int n;
  std::vector<Walk> faces;
  std::vector<char> in_h;
  std::set<std::pair<int, int>> embedded;  // normalized edges
  int remaining_edges;

  explicit BlockEmbedder(const std::vector<std::vector<int>>& a) : adj(a), n((int)a.size()) {
    in_h.assign(n, 0);
    remaining_edges = 0;
    for (int v = 0; v < n; ++v) remaining_edges += (int)adj[v].size();
    remaining_edges /= 2;
  }

  static std::pair<int, int> norm(int u, int v) { return {std::min(u, v), std::max(u, v)}; }
  bool is_embedded(int u, int v) const { return embedded.count(norm(u, v)) > 0; }

  std::vector<int> find_cycle() const {
    // DFS until a back edge closes a cycle; in an undirected DFS every
    // non-tree edge leads to an ancestor.
    std::vector<int> parent(n, -2), it(n, 0);
    std::vector<int> stack{0};
    parent[0] = -1;
    while (!stack.empty()) {
      int v = stack.back();
      if (it[v] < (int)adj[v].size()) {
        int u = adj[v][it[v]++];
        if (parent[u] == -2) {
          parent[u] = v;
          stack.push_back(u);
        } else if (u != parent[v]) {
          std::vector<int> cycle{v};
          for (int w = parent[v];; w = parent[w]) {
            SIPOLY_CHECK(w != -2 && w != -1, "back edge to a non-ancestor");
            cycle.push_back(w);
            if (w == u) break;
          }
          std::reverse(cycle.begin(), cycle.end());
          return cycle;
        }
      } else {
        stack.pop_back();
      }
    }
    SIPOLY_CHECK(false, "2-connected block without a cycle");
    return {};
  }

  std::vector<Fragment> fragments() const {
    std::vector<Fragment> out;
    // Chords: non-embedded edges with both endpoints in H.
    for (int u = 0; u < n; ++u)
      for (int v : adj[u])
        if (u < v && in_h[u] && in_h[v] && !is_embedded(u, v)) {
          Fragment fr;
          fr.attachments = {u, v};
          fr.chord_u = u;
          fr.chord_v = v;
          out.push_back(std::move(fr));
        }
    // Components of the graph minus H, with their attachment vertices.
    std::vector<char> seen(n, 0);
    for (int s = 0; s < n; ++s) {
      if (in_h[s] || seen[s]) continue;
      Fragment fr;
      std::set<int> attach;
      std::vector<int> stack{s};
      seen[s] = 1;
      while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        fr.interior.push_back(v);
        for (int u : adj[v]) {
          if (in_h[u]) {
            attach.insert(u);
          } else if (!seen[u]) {
            seen[u] = 1;
            stack.push_back(u);
          }
        }
      }
      fr.attachments.assign(attach.begin(), attach.end());
      SIPOLY_CHECK(fr.attachments.size() >= 2, "fragment of a 2-connected graph has < 2 attachments");
      out.push_back(std::move(fr));
    }
    return out;
  }

  void compute_admissible(Fragment& fr) const {
    fr.admissible.clear();
    for (int f = 0; f < (int)faces.size(); ++f) {
      const Walk& w = faces[f];
      bool ok = true;
      for (int a : fr.attachments) {
        if (std::find(w.begin(), w.end(), a) == w.end()) {
          ok = false;
          break;
        }
      }
      if (ok) fr.admissible.push_back(f);
    }
  }

  // Path between two attachments through the fragment interior.
  std::vector<int> fragment_path(const Fragment& fr) const {
    if (fr.chord_u >= 0) return {fr.chord_u, fr.chord_v};
    std::vector<char> in_comp(n, 0);
    for (int v : fr.interior) in_comp[v] = 1;
    const int a = fr.attachments[0];
    std::vector<int> parent(n, -1);
    std::vector<int> queue;
    for (int u : adj[a])
      if (in_comp[u] && parent[u] < 0) {
        parent[u] = a;
        queue.push_back(u);
      }
    for (size_t qi = 0; qi < queue.size(); ++qi) {
      int v = queue[qi];
      for (int u : adj[v]) {
        if (in_h[u] && u != a) {
          std::vector<int> path{u, v};
          for (int w = v; parent[w] != a; w = parent[w]) path.push_back(parent[w]);
          path.push_back(a);
          std::reverse(path.begin(), path.end());
          return path;
        }
        if (in_comp[u] && parent[u] < 0) {
          parent[u] = v;
          queue.push_back(u);
        }
      }
    }
    SIPOLY_CHECK(false, "fragment path not found");
    return {};
  }

  void embed_path(int face_id, const std::vector<int>& path) {
    const int a = path.front();
    const int b = path.back();
    Walk w = faces[face_id];
    auto it = std::find(w.begin(), w.end(), a);
    SIPOLY_CHECK(it != w.end(), "path endpoint not on chosen face");
    std::rotate(w.begin(), it, w.end());
    auto itb = std::find(w.begin(), w.end(), b);
    SIPOLY_CHECK(itb != w.end(), "second endpoint not on chosen face");
    const int k = (int)(itb - w.begin());

    // w = a .. b .. ; split into two faces along the path.
    Walk f1(w.begin(), w.begin() + k + 1);           // a .. b
    for (int i = (int)path.size() - 2; i >= 1; --i) f1.push_back(path[i]);
    Walk f2(w.begin() + k, w.end());                 // b .. back to a's predecessor
    f2.push_back(a);
    for (size_t i = 1; i + 1 < path.size(); ++i) f2.push_back(path[i]);
    // f2 currently ends just before b; closing wrap provides (last -> b).

    faces[face_id] = std::move(f1);
    faces.push_back(std::move(f2));

    for (size_t i = 0; i + 1 < path.size(); ++i) {
      embedded.insert(norm(path[i], path[i + 1]));
      --remaining_edges;
    }
    for (int v : path) in_h[v] = 1;
  }

  // Rotation extraction: consecutive arcs (u->v),(v->w) of a face mean
  // that w follows u in the rotation at v.
  std::vector<std::vector<int>> rotations() const {
    std::vector<std::map<int, int>> succ(n);
    for (const Walk& w : faces) {
      const int m = (int)w.size();
      for (int i = 0; i < m; ++i) {
        int u = w[i], v = w[(i + 1) % m], x = w[(i + 2) % m];
        SIPOLY_CHECK(succ[v].emplace(u, x).second, "conflicting rotation successor");
      }
    }
    std::vector<std::vector<int>> rot(n);
    for (int v = 0; v < n; ++v) {
      if (adj[v].empty()) continue;
      int start = adj[v][0];
      int u = start;
      do {
        rot[v].push_back(u);
        auto it = succ[v].find(u);
        SIPOLY_CHECK(it != succ[v].end(), "rotation does not close");
        u = it->second;
      } while (u != start);
      SIPOLY_CHECK(rot[v].size() == adj[v].size(), "rotation misses edges");
    }
    return rot;
  }

  std::vector<std::vector<int>> run() {
    std::vector<int> cycle = find_cycle();
    faces.push_back(cycle);
    faces.emplace_back(cycle.rbegin(), cycle.rend());
    for (size_t i = 0; i < cycle.size(); ++i) {
      embedded.insert(norm(cycle[i], cycle[(i + 1) % cycle.size()]));
      --remaining_edges;
      in_h[cycle[i]] = 1;
    }

    while (remaining_edges > 0) {
      std::vector<Fragment> frs = fragments();
      SIPOLY_CHECK(!frs.empty(), "edges remain but no fragments found");
      int chosen = -1;
      for (int i = 0; i < (int)frs.size(); ++i) {
        compute_admissible(frs[i]);
        if (frs[i].admissible.empty())
          throw Error(ErrorKind::NonPlanar, "a bridge fits in no face of the partial embedding");
        if (frs[i].admissible.size() == 1 && chosen < 0) chosen = i;
      }
      if (chosen < 0) chosen = 0;
      embed_path(frs[chosen].admissible.front(), fragment_path(frs[chosen]));
    }
    return rotations();
  }
};

// Biconnected components as edge sets (iterative Tarjan).
std::vector<std::vector<std::pair<int, int>>> biconnected_blocks(
    const std::vector<std::vector<int>>& adj) {
  const int n = (int)adj.size();
  std::vector<int> num(n, -1), low(n, 0), parent(n, -1), iter(n, 0);
  std::vector<std::pair<int, int>> edge_stack;
  std::vector<std::vector<std::pair<int, int>>> blocks;
  int counter = 0;

  for (int root = 0; root < n; ++root) {
    if (num[root] >= 0) continue;
    std::vector<int> stack{root};
    num[root] = low[root] = counter++;
    while (!stack.empty()) {
      int v = stack.back();
      if (iter[v] < (int)adj[v].size()) {
        int u = adj[v][iter[v]++];
        if (num[u] < 0) {
          edge_stack.emplace_back(v, u);
          parent[u] = v;
          num[u] = low[u] = counter++;
          stack.push_back(u);
        } else if (u != parent[v] && num[u] < num[v]) {
          edge_stack.emplace_back(v, u);
          low[v] = std::min(low[v], num[u]);
        }
      } else {
        stack.pop_back();
        if (!stack.empty()) {
          int p = stack.back();
          low[p] = std::min(low[p], low[v]);
          if (low[v] >= num[p]) {
            std::vector<std::pair<int, int>> block;
            while (true) {
              auto e = edge_stack.back();
              edge_stack.pop_back();
              block.push_back(e);
              if (e == std::make_pair(p, v)) break;
            }
            blocks.push_back(std::move(block));
          }
        }
      }
    }
  }
  return blocks;
}

}  // namespace

std::vector<std::vector<int>> embed_planar(const std::vector<std::vector<int>>& adjacency) {
  const int n = (int)adjacency.size();
  if (n < 1) throw Error(ErrorKind::InvalidInput, "no vertices");

  // Simple + symmetric.
  std::set<std::pair<int, int>> edges;
  for (int v = 0; v < n; ++v) {
    std::set<int> seen;
    for (int u : adjacency[v]) {
      if (u < 0 || u >= n)
        throw Error(ErrorKind::InvalidInput, "adjacency references invalid id " + std::to_string(u));
      if (u == v) throw Error(ErrorKind::InvalidInput, "loop at vertex " + std::to_string(v));
      if (!seen.insert(u).second)
        throw Error(ErrorKind::InvalidInput, "duplicate edge at vertex " + std::to_string(v));
      edges.emplace(std::min(u, v), std::max(u, v));
    }
  }
  for (auto [u, v] : edges) {
    auto has = [&](int a, int b) {
      return std::find(adjacency[a].begin(), adjacency[a].end(), b) != adjacency[a].end();
    };
    if (!has(u, v) || !has(v, u))
      throw Error(ErrorKind::InvalidInput, "adjacency lists are not symmetric");
  }

  if (n == 1) return {{}};

  {
    std::vector<char> visited(n, 0);
    std::vector<int> stack{0};
    visited[0] = 1;
    int count = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int u : adjacency[v])
        if (!visited[u]) {
          visited[u] = 1;
          ++count;
          stack.push_back(u);
        }
    }
    if (count != n) throw Error(ErrorKind::Disconnected, "input graph is disconnected");
  }

  std::vector<std::vector<int>> rotations(n);
  for (const auto& block : biconnected_blocks(adjacency)) {
    if (block.size() == 1) {
      auto [u, v] = block[0];
      rotations[u].push_back(v);
      rotations[v].push_back(u);
      continue;
    }
    // Local relabeling for the block.
    std::vector<int> verts;
    {
      std::set<int> vs;
      for (auto [u, v] : block) {
        vs.insert(u);
        vs.insert(v);
      }
      verts.assign(vs.begin(), vs.end());
    }
    std::map<int, int> local;
    for (int i = 0; i < (int)verts.size(); ++i) local[verts[i]] = i;
    std::vector<std::vector<int>> badj(verts.size());
    for (auto [u, v] : block) {
      badj[local[u]].push_back(local[v]);
      badj[local[v]].push_back(local[u]);
    }
    BlockEmbedder be(badj);
    std::vector<std::vector<int>> brot = be.run();
    for (int i = 0; i < (int)verts.size(); ++i)
      for (int u : brot[i]) rotations[verts[i]].push_back(verts[u]);
  }

  // The result must be a sphere embedding; anything else is a bug.
  SIPOLY_CHECK(euler_check(build_map(rotations)), "embedding failed the genus check");
  return rotations;
}

}  // namespace sipoly

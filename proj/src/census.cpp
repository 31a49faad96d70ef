#include "sipoly/census.hpp"

#include <algorithm>
#include <sstream>

#include "sipoly/check.hpp"
#include "sipoly/duality.hpp"

namespace sipoly {

int Census::total() const {
  int n = 0;
  for (const auto& [v, entries] : by_v) n += static_cast<int>(entries.size());
  return n;
}

std::vector<int> Census::counts() const {
  std::vector<int> out;
  for (int v = 4; v <= max_v; ++v) {
    auto it = by_v.find(v);
    out.push_back(it == by_v.end() ? 0 : static_cast<int>(it->second.size()));
  }
  return out;
}

std::vector<std::vector<int>> involution_table(const Polyhedron& p, const StrongInvolution& tau) {
  const std::vector<int> label = canonical_form(p.map()).vertex_label;
  std::vector<std::vector<int>> table(p.vertex_count());
  for (VertexId v = 0; v < p.vertex_count(); ++v) {
    std::vector<int> face;
    for (VertexId w : p.face_vertices(tau(v))) face.push_back(label[w]);
    std::sort(face.begin(), face.end());
    table[label[v]] = std::move(face);
  }
  return table;
}

namespace {

CensusEntry make_entry(const Polyhedron& p, const StrongInvolution& tau, bool from_expansion,
                       int wheel_rim, std::vector<ExpansionMove> moves) {
  const CanonicalForm form = canonical_form(p.map());
  CensusEntry entry;
  entry.code = form.code;
  entry.v = p.vertex_count();
  entry.e = p.edge_count();
  entry.f = p.face_count();
  entry.involution = involution_table(p, tau);
  entry.chiral = form.chiral;
  entry.from_expansion = from_expansion;
  entry.wheel_rim = wheel_rim;
  entry.moves = std::move(moves);
  return entry;
}

void sort_entries(Census& census) {
  for (auto& [v, entries] : census.by_v)
    std::sort(entries.begin(), entries.end(),
              [](const CensusEntry& a, const CensusEntry& b) { return a.code < b.code; });
}

}  // namespace

Census si_census_expand(int max_v) {
  if (max_v < 4) throw Error(ErrorKind::InvalidInput, "census bound must be at least 4");

  struct Node {
    Polyhedron p;
    StrongInvolution tau;
    int wheel_rim;
    std::vector<ExpansionMove> moves;
    CanonicalCode code;
  };

  Census census;
  census.max_v = max_v;
  std::set<CanonicalCode> seen;
  std::map<int, std::vector<Node>> frontier;  // per V, kept sorted by code

  for (int rim = 3; rim + 1 <= max_v; rim += 2) {
    Polyhedron w = wheel(rim);
    std::vector<StrongInvolution> sis = strong_involutions(w);
    SIPOLY_CHECK(!sis.empty(), "odd wheel without a strong involution");
    Node node{w, sis.front(), rim, {}, canonical_code(w)};
    if (seen.insert(node.code).second) {
      census.by_v[w.vertex_count()].push_back(
          make_entry(node.p, node.tau, true, node.wheel_rim, node.moves));
      frontier[w.vertex_count()].push_back(std::move(node));
    }
  }

  for (int v = 4; v < max_v; ++v) {
    auto it = frontier.find(v);
    if (it == frontier.end()) continue;
    std::sort(it->second.begin(), it->second.end(),
              [](const Node& a, const Node& b) { return a.code < b.code; });
    for (const Node& node : it->second) {
      for (auto& [move, result] : enumerate_expansions_with_results(node.p, node.tau)) {
        CanonicalCode code = canonical_code(result.polyhedron);
        if (!seen.insert(code).second) continue;
        std::vector<ExpansionMove> moves = node.moves;
        moves.push_back(move);
        census.by_v[result.polyhedron.vertex_count()].push_back(
            make_entry(result.polyhedron, result.involution, true, node.wheel_rim, moves));
        frontier[result.polyhedron.vertex_count()].push_back(
            Node{std::move(result.polyhedron), std::move(result.involution), node.wheel_rim,
                 std::move(moves), std::move(code)});
      }
    }
  }

  sort_entries(census);
  return census;
}

std::vector<Polyhedron> enumerate_polyhedra(int max_v, int max_e) {
  if (max_v < 4 || max_e < 6)
    throw Error(ErrorKind::InvalidInput, "bounds below the smallest wheel");

  std::vector<Polyhedron> out;
  std::set<CanonicalCode> seen;
  std::vector<Polyhedron> queue;

  auto push = [&](Polyhedron p) {
    if (p.vertex_count() > max_v || p.edge_count() > max_e) return;
    if (!seen.insert(canonical_code(p)).second) return;
    out.push_back(p);
    queue.push_back(std::move(p));
  };

  for (int rim = 3; rim + 1 <= max_v && 2 * rim <= max_e; ++rim) push(wheel(rim));

  for (size_t qi = 0; qi < queue.size(); ++qi) {
    const Polyhedron p = queue[qi];  // copy: queue may reallocate

    // Face diagonalization: one more edge, same vertices.
    if (p.edge_count() + 1 <= max_e) {
      for (FaceId f = 0; f < p.face_count(); ++f) {
        const int len = p.face_size(f);
        if (len < 4) continue;
        const std::vector<VertexId>& walk = p.face_walk(f);
        for (int i = 0; i < len; ++i)
          for (int j = i + 2; j < len; ++j) {
            if (i == 0 && j == len - 1) continue;
            if (p.adjacent(walk[i], walk[j])) continue;
            push(Polyhedron::validate(add_diagonal(p.map(), p.faces().walks[f], i, j)));
          }
      }
    }

    // Vertex splitting: one more vertex, one more edge.  Splits that
    // break 3-connectivity are discarded.
    if (p.vertex_count() + 1 <= max_v && p.edge_count() + 1 <= max_e) {
      for (VertexId v = 0; v < p.vertex_count(); ++v) {
        const int deg = p.degree(v);
        if (deg < 4) continue;
        for (int start = 0; start < deg; ++start)
          for (int arc = 2; arc <= deg - 2; ++arc) {
            CombinatorialMap split = split_vertex(p.map(), v, start, arc);
            if (!validate_kind(split).has_value()) push(Polyhedron::validate(split));
          }
      }
    }
  }

  std::sort(out.begin(), out.end(), [](const Polyhedron& a, const Polyhedron& b) {
    if (a.vertex_count() != b.vertex_count()) return a.vertex_count() < b.vertex_count();
    return canonical_code(a) < canonical_code(b);
  });
  return out;
}

std::set<CanonicalCode> all_polyhedra_tutte(int max_v, int max_e) {
  std::set<CanonicalCode> out;
  for (const Polyhedron& p : enumerate_polyhedra(max_v, max_e)) out.insert(canonical_code(p));
  return out;
}

Census si_census_oracle(int max_v) {
  if (max_v < 4) throw Error(ErrorKind::InvalidInput, "census bound must be at least 4");
  Census census;
  census.max_v = max_v;
  for (const Polyhedron& p : enumerate_polyhedra(max_v, 2 * max_v - 2)) {
    if (p.vertex_count() != p.face_count()) continue;
    std::vector<StrongInvolution> sis = strong_involutions(p);
    if (sis.empty()) continue;
    census.by_v[p.vertex_count()].push_back(make_entry(p, sis.front(), false, 0, {}));
  }
  sort_entries(census);
  return census;
}

CensusDiff compare_censuses(const Census& a, const Census& b) {
  if (a.max_v != b.max_v)
    throw Error(ErrorKind::BoundMismatch, "censuses were generated to different vertex bounds");

  CensusDiff diff;
  diff.max_v = a.max_v;
  for (int v = 4; v <= a.max_v; ++v) {
    std::set<std::string> codes_a, codes_b;
    if (auto it = a.by_v.find(v); it != a.by_v.end())
      for (const CensusEntry& entry : it->second) codes_a.insert(entry.code.str());
    if (auto it = b.by_v.find(v); it != b.by_v.end())
      for (const CensusEntry& entry : it->second) codes_b.insert(entry.code.str());

    std::vector<std::string> only_a, only_b;
    std::set_difference(codes_a.begin(), codes_a.end(), codes_b.begin(), codes_b.end(),
                        std::back_inserter(only_a));
    std::set_difference(codes_b.begin(), codes_b.end(), codes_a.begin(), codes_a.end(),
                        std::back_inserter(only_b));
    if (!only_a.empty() || !only_b.empty())
      diff.differences[v] = {std::move(only_a), std::move(only_b)};
  }
  return diff;
}

std::string CensusDiff::report() const {
  std::ostringstream os;
  if (empty()) {
    os << "censuses agree up to " << max_v << " vertices\n";
    return os.str();
  }
  for (const auto& [v, d] : differences) {
    os << "V=" << v << ": " << d.first.size() << " only in first, " << d.second.size()
       << " only in second\n";
    for (const auto& c : d.first) os << "  first-only:  " << c << "\n";
    for (const auto& c : d.second) os << "  second-only: " << c << "\n";
  }
  return os.str();
}

}  // namespace sipoly

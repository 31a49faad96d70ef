#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "sipoly/expansion.hpp"
#include "sipoly/polyhedron.hpp"

namespace sipoly {

struct CensusEntry {
  CanonicalCode code;
  int v = 0, e = 0, f = 0;
  /// Involution image table under canonical labels: entry i is the
  /// sorted vertex set of the face assigned to canonical vertex i.
  std::vector<std::vector<int>> involution;
  bool chiral = false;

  // Provenance.
  bool from_expansion = false;
  int wheel_rim = 0;                 // seed wheel rim length (expansion runs)
  std::vector<ExpansionMove> moves;  // expansion path from the seed wheel
};

struct Census {
  int max_v = 0;
  std::map<int, std::vector<CensusEntry>> by_v;  // per V, sorted by code

  int total() const;
  std::vector<int> counts() const;  // per V from 4 to max_v
};

/// Involution images under the canonical relabeling of p.
std::vector<std::vector<int>> involution_table(const Polyhedron& p, const StrongInvolution& tau);

/// Breadth-first closure of the odd wheels under one-step expansions,
/// deduplicated by canonical code, pruned above max_v.
Census si_census_expand(int max_v);

/// All polyhedra with at most max_v vertices and max_e edges, generated
/// as the closure of the wheels under face diagonalization and vertex
/// splitting, deduplicated by canonical code.  Sorted by (V, code).
std::vector<Polyhedron> enumerate_polyhedra(int max_v, int max_e);

/// Canonical codes of the enumeration above.
std::set<CanonicalCode> all_polyhedra_tutte(int max_v, int max_e);

/// Independent census: filter the full enumeration (edge bound
/// 2*max_v - 2, the self-dual count line) by having a strong
/// involution.
Census si_census_oracle(int max_v);

struct CensusDiff {
  int max_v = 0;
  /// Per V: codes only in the first census, codes only in the second.
  std::map<int, std::pair<std::vector<std::string>, std::vector<std::string>>> differences;

  bool empty() const { return differences.empty(); }
  std::string report() const;
};

/// Symmetric difference of canonical-code sets per vertex count.
/// Throws BoundMismatch when the censuses were built to different
/// bounds.
CensusDiff compare_censuses(const Census& a, const Census& b);

}  // namespace sipoly

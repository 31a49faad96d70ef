#pragma once

#include <vector>

#include "sipoly/map.hpp"

namespace sipoly {

/// Computes a genus-0 rotation system for a simple connected graph given
/// as unordered adjacency lists.  Incremental face-by-face embedding,
/// block by block; quadratic, fine up to a few hundred vertices.
///
/// Throws NonPlanar when no embedding exists, InvalidInput on malformed
/// adjacency, Disconnected on disconnected input.
std::vector<std::vector<int>> embed_planar(const std::vector<std::vector<int>>& adjacency);

}  // namespace sipoly

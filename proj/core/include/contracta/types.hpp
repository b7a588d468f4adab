#pragma once

#include <cstdint>
#include <vector>

namespace contracta {

using VertexId = std::int32_t;
using SimplexId = std::int32_t;

inline constexpr SimplexId kNoSimplex = -1;

/// A mod-2 chain: a set of simplices of one dimension. The simplex list is
/// kept sorted and duplicate-free so that addition is a symmetric difference.
struct Chain {
  int dim = -1;
  std::vector<SimplexId> simplices;

  bool empty() const { return simplices.empty(); }
  bool operator==(const Chain&) const = default;
};

/// Unordered pair of vertices naming an edge. Operations that contract or
/// classify re-order the endpoints so the first one precedes the second in
/// the complex's total order.
struct Edge {
  VertexId a = -1;
  VertexId b = -1;
  bool operator==(const Edge&) const = default;
};

}  // namespace contracta

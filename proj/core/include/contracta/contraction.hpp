#pragma once

#include <utility>
#include <vector>

#include "contracta/chain.hpp"
#include "contracta/filtered_complex.hpp"
#include "contracta/types.hpp"

namespace contracta {

/// How a simplex sits relative to the edge {u,v} being contracted.
///
///  - Vanishing: contains both u and v; loses a dimension under contraction.
///  - Mirrored: a face of a vanishing simplex containing exactly one of u, v.
///    Mirrored simplices come in pairs that differ by swapping u and v and
///    collapse to a single simplex; `mirror` is the partner.
///  - Adjacent: has a mirrored facet but is not itself local.
///  - Nonlocal: everything else; mapped identically.
struct SimplexClass {
  enum class Tag { Nonlocal, Vanishing, Mirrored, Adjacent };
  Tag tag = Tag::Nonlocal;
  SimplexId mirror = kNoSimplex;
  bool operator==(const SimplexClass&) const = default;
};

/// The contraction of one edge: the collapsed complex plus the simplicial map
/// between source and result.
///
/// Induced data on the contracted complex: each simplex's height is the
/// minimum over its preimages, and its rank is the first rank among its
/// preimages in the source order. `preimages` lists source ids in ascending
/// source rank, so a collapsed mirror pair appears as [earlier mirror, later
/// mirror, their vanishing cofacet].
struct ContractionRecord {
  VertexId u = -1;  // u precedes v in the source order
  VertexId v = -1;
  FilteredComplex source;
  FilteredComplex contracted;
  std::vector<SimplexId> image;                   // source id -> contracted id
  std::vector<std::vector<SimplexId>> preimages;  // contracted id -> source ids
  std::vector<SimplexClass> classes;              // indexed by source id
};

/// Orders e's endpoints by the complex's total order. Throws UnknownEdgeError
/// if either vertex or the edge itself is absent.
std::pair<VertexId, VertexId> normalize_edge(const FilteredComplex& K, Edge e);

/// Total classification of every simplex relative to e.
std::vector<SimplexClass> classify(const FilteredComplex& K, Edge e);

/// lk({u,v}) == lk(u) intersect lk(v). Edges passing this test keep the
/// complex's structure intact under contraction and are called contractible.
bool link_condition(const FilteredComplex& K, Edge e);

/// Contracts a contractible edge, rebuilding the result complex from scratch.
/// Throws LinkConditionError when e fails the link condition.
ContractionRecord contract(const FilteredComplex& K, Edge e);

/// The induced chain map: vanishing simplices drop out (their image has lower
/// dimension), mirror pairs cancel mod 2, everything else maps through.
/// Input is a chain over the source complex; output lives on the contracted
/// complex and never rises in height.
Chain xi_chain(const ContractionRecord& rec, const Chain& c);

}  // namespace contracta

#pragma once

#include <cstddef>
#include <vector>

#include "contracta/chain.hpp"
#include "contracta/filtered_complex.hpp"
#include "contracta/pairing.hpp"
#include "contracta/types.hpp"

namespace contracta {

/// Mod-2 boundary matrix in rank order: column r holds the ranks of the
/// facets of the simplex at rank r, ascending.
struct BoundaryMatrix {
  std::vector<std::vector<std::size_t>> columns;
};

BoundaryMatrix boundary_matrix(const FilteredComplex& K);

enum class ReductionStrategy {
  Plain,  // left-to-right column reduction
  Twist,  // top dimension first, clearing paired creator columns
};

/// Ground-truth pairing by column reduction. Both strategies produce the
/// identical pairing; Twist is the default because it skips cleared columns.
PersistencePairing reduce(const FilteredComplex& K,
                          ReductionStrategy strategy = ReductionStrategy::Twist);

struct DiagramPoint {
  double birth = 0.0;
  double death = 0.0;  // +infinity for essential classes
  int dim = 0;
  bool operator==(const DiagramPoint&) const = default;
};

/// Multiset of (birth, death, dim) points. Zero-persistence pairs are never
/// stored: they sit on the diagonal, which is available to any matching with
/// infinite multiplicity, so they cannot affect any distance.
struct PersistenceDiagram {
  std::vector<DiagramPoint> points;
  bool operator==(const PersistenceDiagram&) const = default;
};

/// The p-dimensional diagram of a pairing: (h(creator), h(destroyer)) per
/// finite pair, (h, +inf) per essential p-simplex. p above the complex
/// dimension yields an empty diagram; negative p throws
/// DimensionOutOfRangeError.
PersistenceDiagram diagram(const PersistencePairing& pairing, const FilteredComplex& K, int p);

/// Exact bottleneck distance. Points match within their own dimension or go
/// to the diagonal at half their persistence; points with infinite death must
/// match infinite-death points of the same dimension (cost: birth difference)
/// and their counts must agree per dimension, else the distance is +inf.
/// Computed by bisecting the candidate distances with bipartite matching
/// feasibility tests.
double bottleneck(const PersistenceDiagram& d1, const PersistenceDiagram& d2);

/// Whether two cycles supported in the sublevel at a differ by a boundary
/// there, decided by a mod-2 solve against the sublevel boundary matrix.
/// Throws NotACycleError (non-cycle or support above a), DimensionMismatchError.
bool homologous(const FilteredComplex& K, double a, const Chain& c1, const Chain& c2);

}  // namespace contracta

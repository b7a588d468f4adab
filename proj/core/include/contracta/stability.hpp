#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "contracta/contraction.hpp"
#include "contracta/filtered_complex.hpp"
#include "contracta/types.hpp"

namespace contracta {

/// Height interval outside of which contracting `edge` cannot disturb
/// p-dimensional homology of sublevel sets. Contractions whose windows are
/// pairwise disjoint compose without accumulating diagram error.
struct Window {
  double lo = 0.0;
  double hi = 0.0;
  int p = 0;
  Edge edge;
};

inline bool windows_overlap(const Window& x, const Window& y) {
  // Closed intervals: a shared endpoint counts as overlap.
  return !(x.hi < y.lo || y.hi < x.lo);
}

/// Admissibility of e for dimension p at tolerance eps: every pair of
/// p-dimensional mirrors must sit within eps of their shared vanishing
/// cofacet's height, and likewise for (p-1)-dimensional mirrors when p > 0
/// (for p-1 = 0 that covers the endpoint pair (u,v) against the edge itself).
/// Contracting such an edge moves the p-dimensional diagram by at most eps in
/// bottleneck distance. Throws LinkConditionError.
bool is_p_eps_admissible(const FilteredComplex& K, Edge e, int p, double eps);

/// The reverse-direction chain map from the contracted complex back to the
/// source, extended linearly mod 2 from the per-simplex rule:
///  - image of a mirror pair: the earlier mirror, plus the vanishing cofacet
///    of each of its mirrored facets whose partner precedes it;
///  - image of an adjacent simplex: its preimage, plus the same correction;
///  - nonlocal: identity.
/// For a (p,eps)-admissible edge the image of a chain at sublevel a is
/// supported at sublevel a + eps. Throws DimensionMismatchError.
Chain psi_chain(const ContractionRecord& rec, const Chain& c, int p);

/// The p-window of a contractible edge, computed from local heights only:
///   0 < p < dim K : [min (p-1)-mirror height, max vanishing (p+1) height]
///   p = 0         : [h(u), h(e)]
///   p = dim K     : [min (p-1)-mirror height, max vanishing p height]
/// Missing local simplices of the nominal dimension widen the bound to the
/// full local range, never narrow it. Throws LinkConditionError,
/// DimensionOutOfRangeError.
Window window(const FilteredComplex& K, Edge e, int p);

/// A maximal (greedy) set of individually (p,eps)-admissible contractible
/// edges, pairwise vertex-disjoint with pairwise disjoint windows; selection
/// is by ascending window right endpoint. Empty when p exceeds dim K.
std::vector<Edge> compatible_set(const FilteredComplex& K, int p, double eps);

struct StageLog {
  std::vector<Edge> contracted_edges;
  std::vector<Window> windows;
  std::size_t simplices_before = 0;
  std::size_t simplices_after = 0;
};

struct SimplificationLog {
  std::vector<StageLog> stages;
  double epsilon = 0.0;
  int p = 0;

  std::size_t total_contractions() const;
};

/// Staged greedy simplification: select a compatible set, contract its edges
/// in order while re-validating each against the current complex (skipping
/// any that no longer qualify), and repeat until no admissible edge remains
/// or max_stages is hit (negative max_stages: unbounded). Each stage moves
/// the p-dimensional diagram by at most eps, so the whole run moves it by at
/// most stages * eps.
std::pair<FilteredComplex, SimplificationLog> simplify(const FilteredComplex& K, int p,
                                                       double eps, int max_stages);

}  // namespace contracta

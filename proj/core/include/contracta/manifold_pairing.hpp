#pragma once

#include <vector>

#include "contracta/filtered_complex.hpp"
#include "contracta/pairing.hpp"
#include "contracta/types.hpp"

namespace contracta {

/// The two graphs a closed triangulated surface induces. Every edge of the
/// complex appears as exactly one arc in each: in the vertex graph it joins
/// its endpoints, in the triangle graph it joins the two triangles it
/// borders. Arc weight is the edge's height.
struct DualGraphs {
  struct Arc {
    SimplexId edge = kNoSimplex;
    SimplexId nodes[2] = {kNoSimplex, kNoSimplex};
  };
  std::vector<Arc> vertex_arcs;    // nodes are vertex simplices
  std::vector<Arc> triangle_arcs;  // nodes are triangle simplices
};

/// True iff every edge borders exactly two triangles and every vertex link is
/// a single cycle (and the complex is 2-dimensional).
bool verify_closed_2manifold(const FilteredComplex& K);

/// Throws NotClosed2ManifoldError.
DualGraphs build_dual_graphs(const FilteredComplex& K);

/// Near-linear persistence pairing for closed triangulated surfaces.
///
/// Kruskal on the vertex graph in ascending rank order pairs each tree arc's
/// edge with the later root of the two trees it merges; the earlier root
/// survives. Kruskal on the triangle graph in descending rank order pairs
/// each tree arc's edge with the earlier root; the later root survives.
/// Leftovers are essential: one vertex and one triangle per component plus
/// the edges that are tree arcs in neither graph. Throws
/// NotClosed2ManifoldError.
PersistencePairing compute_pairing(const FilteredComplex& K);

/// Pairing-preservation test for a contractible edge e = {u,v}, u before v:
/// e must be paired with v, and each of its two triangles must be paired with
/// the later of that triangle's two mirrored edges. Contracting an admissible
/// edge maps the pairing of K onto the pairing of the contracted complex.
/// Throws LinkConditionError, NotClosed2ManifoldError.
bool is_admissible(const FilteredComplex& K, Edge e, const PersistencePairing& pairing);

}  // namespace contracta

#pragma once

#include <span>

#include "contracta/filtered_complex.hpp"
#include "contracta/types.hpp"

namespace contracta {

/// Builds a chain from an id list, sorting and cancelling duplicates mod 2.
/// Every id must name a p-simplex of K; throws DimensionMismatchError.
Chain make_chain(const FilteredComplex& K, int dim, std::vector<SimplexId> simplices);

/// Mod-2 sum. Nonempty operands must agree on dimension.
Chain chain_xor(const Chain& x, const Chain& y);

/// Boundary of a chain: the mod-2 sum of all facets.
Chain boundary(const FilteredComplex& K, const Chain& c);

bool is_cycle(const FilteredComplex& K, const Chain& c);

/// Restriction to the sublevel at a: drops simplices of height > a.
Chain restrict_chain(const FilteredComplex& K, const Chain& c, double a);

/// Largest height among the chain's simplices; -infinity for the zero chain.
double chain_height(const FilteredComplex& K, const Chain& c);

}  // namespace contracta

#include "contracta/chain.hpp"

#include <algorithm>
#include <limits>

namespace contracta {

namespace {

// Sorts and cancels duplicates mod 2 in place.
void normalize(std::vector<SimplexId>& ids) {
  std::sort(ids.begin(), ids.end());
  std::vector<SimplexId> out;
  out.reserve(ids.size());
  for (std::size_t i = 0; i < ids.size();) {
    std::size_t j = i;
    while (j < ids.size() && ids[j] == ids[i]) ++j;
    if ((j - i) % 2) out.push_back(ids[i]);
    i = j;
  }
  ids = std::move(out);
}

}  // namespace

Chain make_chain(const FilteredComplex& K, int dim, std::vector<SimplexId> simplices) {
  for (SimplexId s : simplices) {
    if (s < 0 || static_cast<std::size_t>(s) >= K.size())
      throw UnknownSimplexError("chain references simplex id " + std::to_string(s));
    if (K.dim(s) != dim)
      throw DimensionMismatchError("chain of dimension " + std::to_string(dim) +
                                   " contains a simplex of dimension " +
                                   std::to_string(K.dim(s)));
  }
  normalize(simplices);
  return Chain{dim, std::move(simplices)};
}

Chain chain_xor(const Chain& x, const Chain& y) {
  if (!x.empty() && !y.empty() && x.dim != y.dim)
    throw DimensionMismatchError("adding chains of dimensions " + std::to_string(x.dim) +
                                 " and " + std::to_string(y.dim));
  Chain out;
  out.dim = x.empty() ? y.dim : x.dim;
  out.simplices.reserve(x.simplices.size() + y.simplices.size());
  std::set_symmetric_difference(x.simplices.begin(), x.simplices.end(), y.simplices.begin(),
                                y.simplices.end(), std::back_inserter(out.simplices));
  return out;
}

Chain boundary(const FilteredComplex& K, const Chain& c) {
  std::vector<SimplexId> ids;
  for (SimplexId s : c.simplices)
    for (SimplexId f : K.facets(s)) ids.push_back(f);
  std::sort(ids.begin(), ids.end());
  std::vector<SimplexId> out;
  for (std::size_t i = 0; i < ids.size();) {
    std::size_t j = i;
    while (j < ids.size() && ids[j] == ids[i]) ++j;
    if ((j - i) % 2) out.push_back(ids[i]);
    i = j;
  }
  return Chain{c.dim - 1, std::move(out)};
}

bool is_cycle(const FilteredComplex& K, const Chain& c) { return boundary(K, c).empty(); }

Chain restrict_chain(const FilteredComplex& K, const Chain& c, double a) {
  Chain out;
  out.dim = c.dim;
  for (SimplexId s : c.simplices)
    if (K.height(s) <= a) out.simplices.push_back(s);
  return out;
}

double chain_height(const FilteredComplex& K, const Chain& c) {
  double h = -std::numeric_limits<double>::infinity();
  for (SimplexId s : c.simplices) h = std::max(h, K.height(s));
  return h;
}

}  // namespace contracta

#pragma once

#include <utility>
#include <vector>

#include "contracta/types.hpp"

namespace contracta {

/// A persistence pairing: (creator, destroyer) simplex pairs where the
/// destroyer has dimension one higher and comes later in the total order,
/// plus the unpaired simplices carrying essential classes. Pairs and
/// essentials are kept sorted by creator rank so pairings compare with ==.
struct PersistencePairing {
  std::vector<std::pair<SimplexId, SimplexId>> pairs;
  std::vector<SimplexId> essential;

  bool operator==(const PersistencePairing&) const = default;
};

}  // namespace contracta

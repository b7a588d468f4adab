#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "contracta/persistence.hpp"

namespace contracta {

/// Outcome of one randomized property sweep.
struct SweepResult {
  std::string name;
  int cases = 0;
  int failures = 0;
  std::vector<std::string> messages;  // one per failure, capped

  bool ok() const { return failures == 0; }
};

struct SweepOptions {
  std::uint64_t seed = 1;
  int cases = 50;
  int threads = 0;  // 0: CONTRACTA_THREADS env var, else hardware concurrency
};

/// Order/closure/link identities on random complexes.
SweepResult sweep_core_properties(const SweepOptions& opt);

/// Kruskal pairing == matrix-reduction pairing on random closed surfaces.
SweepResult sweep_oracle_equivalence(const SweepOptions& opt);

/// Contracting an admissible edge maps the pairing onto the contracted
/// pairing, for every admissible edge of every generated surface.
SweepResult sweep_pairing_preservation(const SweepOptions& opt);

/// Chain-map identities for both directions: cycles stay cycles, boundaries
/// stay boundaries; the forward map commutes with the boundary operator
/// exactly. `opt.cases` counts chains per identity.
SweepResult sweep_chain_maps(const SweepOptions& opt);

/// d_b(before, after) <= eps for single admissible contractions, p in {0,1},
/// eps drawn from [0.1, 5]. `opt.cases` counts contractions.
SweepResult sweep_single_contraction_stability(const SweepOptions& opt);

/// d_b(first, last) <= eps across compatible sequences of >= 3 contractions.
SweepResult sweep_compatible_sequences(const SweepOptions& opt);

/// Round-trip commutation: mapping a sublevel cycle forward and back lands in
/// the same homology class at sublevel a + eps, in both directions.
SweepResult sweep_commutation(const SweepOptions& opt);

/// Exact agreement with the all-bijections oracle on small random diagrams.
SweepResult sweep_bottleneck_oracle(const SweepOptions& opt);

/// Metric axioms for the bottleneck distance on random diagram triples.
SweepResult sweep_bottleneck_metric(const SweepOptions& opt);

std::vector<SweepResult> run_all_sweeps(const SweepOptions& opt);

/// Exhaustive minimum over all bijections (diagonal included); independent of
/// the matching-based implementation. Intended for diagrams of <= 8 points.
double brute_force_bottleneck(const PersistenceDiagram& d1, const PersistenceDiagram& d2);

/// Worker count: CONTRACTA_THREADS when set, else hardware concurrency.
int worker_count(int requested);

}  // namespace contracta

#pragma once

#include <cstdint>
#include <random>

#include "contracta/filtered_complex.hpp"

namespace contracta {

/// An n-by-n triangulated grid with seeded value-noise heights in [0, 10].
/// Deterministic in (n, seed, roughness); roughness in [0,1] weights the
/// higher noise octaves. Positions are set to (i, j, height).
FilteredComplex generate_terrain(int n, std::uint64_t seed, double roughness);

/// Terrain variant with a diagonal ramp of the given amplitude plus value
/// noise scaled by noise_amplitude: local height variation stays small while
/// distinct regions occupy distinct height bands.
FilteredComplex generate_ramp_terrain(int n, std::uint64_t seed, double amplitude,
                                      double noise_amplitude);

/// Random triangulated 2-sphere grown from a tetrahedron by vertex splits and
/// edge flips, with distinct lower-star vertex heights in (0, 10].
FilteredComplex generate_random_sphere(int target_vertices, std::uint64_t seed);

/// q-by-r grid torus (q, r >= 3) with distinct lower-star vertex heights.
FilteredComplex generate_torus(int q, int r, std::uint64_t seed);

/// Random flag complex on n vertices: sample edges with probability edge_prob
/// and fill triangles and tetrahedra on cliques; lower-star heights in [0,10].
FilteredComplex generate_flag_complex(int n, double edge_prob, std::uint64_t seed);

/// Splittable deterministic seed stream for sweeps: mixes (seed, stream, i).
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream, std::uint64_t i);

}  // namespace contracta

#pragma once

#include <cstdint>

#include "pcube/graph.hpp"

namespace pcube {

// 2^d vertices named by d-bit strings (d = 0 gives the single vertex "0"),
// edges between words at Hamming distance 1.
Graph hypercube(int d);

// Cycle c0..c{n-1}; n must be even and >= 4 (odd n is a dedicated error
// since an odd cycle is never bipartite).
Graph even_cycle(int n);

// Path p0..p{n-1}, n >= 1.
Graph path_graph(int n);

// Hub "h" joined to every even-indexed vertex of the rim cycle r0..r{2n-1};
// 2n+1 vertices and 3n edges.  Requires n >= 3.
Graph gear(int n);

// cartesian_product(gear(n), K2): 2(2n+1) vertices, 8n+1 edges.
Graph gear_obstruction(int n);

// Grow a partial cube from a single vertex by `steps` random expansions
// (rejection sampling, <= 200 tries per step, sampling_exhausted beyond).
// Deterministic given the seed; not uniform over partial cubes.  A positive
// max_vertices rejects candidate expansions beyond that size.
Graph random_partial_cube(int steps, std::uint64_t seed, int max_vertices = 0);

// Same sampler with candidates additionally required to keep the expansion
// planar, so the result is always a planar partial cube.
Graph random_planar_partial_cube(int steps, std::uint64_t seed, int max_vertices = 0);

}  // namespace pcube

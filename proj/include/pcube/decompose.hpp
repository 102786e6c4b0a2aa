#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "pcube/graph.hpp"
#include "pcube/noncrossing.hpp"
#include "pcube/theta.hpp"

namespace pcube {

// Replayable construction of a graph from a single vertex by expansion
// steps, plus the final side labeling.  Each step's expansion (under its
// lift) equals the next step's base, and the step count equals the number
// of theta classes of the target.
struct DecompositionCertificate {
  std::vector<NonCrossingCertificate> steps;
  HypercubeLabeling final_labeling;
};

// Either witness refutes independently: a recognition failure or a
// Kuratowski subdivision.
struct Refutation {
  std::variant<PcRefutation, KuratowskiWitness> why;
};

using CertifyResult = std::variant<DecompositionCertificate, Refutation>;

// Recognition first, then planarity; on success peel one class per level
// (lowest canonical index) down to a single vertex.  Steps are returned in
// expansion order, so replay reads them front to back.
CertifyResult certify_planar_partial_cube(const Graph& h);

// Same decomposition with a seed-driven class choice at every level; the
// certificate differs but replays to the same graph (any class works).
CertifyResult certify_planar_partial_cube_shuffled(const Graph& h, std::uint64_t seed);

// Rebuild the graph from the steps, checking at each one: the base matches
// the previous expansion, verify_noncrossing holds, and the lift is a
// collision-free naming of both sides.  Throws invalid_step naming the
// failing step; on success the result is a planar partial cube matching
// the final labeling.
Graph replay(const DecompositionCertificate& cert);

// h must be a partial cube (throws not_partial_cube).  True iff h is
// non-planar and every one-step minor (class contraction or side
// restriction) is planar; deeper minors cannot hide non-planarity because
// planarity is preserved downward along these steps.
bool is_minimal_obstruction(const Graph& h);

}  // namespace pcube

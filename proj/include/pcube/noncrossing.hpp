#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pcube/graph.hpp"
#include "pcube/ops.hpp"
#include "pcube/planarity.hpp"
#include "pcube/theta.hpp"

namespace pcube {

// The matching edges of one class in the cyclic order the dual cut cycle
// crosses them; consecutive edges share a face of the host embedding.
struct CutCycleOrder {
  int class_id = -1;
  // (side-1 endpoint, side-2 endpoint) per matching edge.
  std::vector<std::pair<std::string, std::string>> order;
};

CutCycleOrder cut_cycle_order(const Graph& h, const PlaneEmbedding& emb,
                              const ThetaPartition& tp, int class_id);

// One expansion step with its planarity evidence: the base graph and side
// sets, embeddings of both sides whose outer faces carry the shared
// subgraph, the two cyclic orders along those outer faces, and the naming
// map tying the step's expansion to the original vertex ids.
struct NonCrossingCertificate {
  ExpansionSpec spec;
  PlaneEmbedding emb1, emb2;
  std::vector<std::string> order1, order2;  // cyclic sequences of shared vertices
  Lift lift;                                // expansion result naming (replay plumbing)
};

// Derive the certificate for one class of a planar partial cube: embed h,
// read the matching order off the dual cut cycle, contract the class for
// the base, and restrict the embedding to each side.
NonCrossingCertificate extract_noncrossing_step(const Graph& h, const ThetaPartition& tp,
                                                int class_id);

// Spec validity, both side embeddings valid with all shared vertices on
// their outer faces, and order1 = reverse(order2) cyclically (sequences of
// length <= 2 pass the order clause automatically).
bool verify_noncrossing(const NonCrossingCertificate& cert);

// Planarity-preserving expansion (equivalent to the existence of a
// non-crossing realization).
bool is_noncrossing_expansion(const ExpansionSpec& spec);

// The weaker condition: each side has an embedding with the shared
// subgraph on one face (checked per side via the apex construction).
bool is_two_face_expansion(const ExpansionSpec& spec);

// A counterexample separating the two conditions: a spec that satisfies
// the 2-face condition yet expands to a non-planar graph, packaged with
// embeddings witnessing the former and a Kuratowski subdivision (in the
// default copy naming of expand) witnessing the latter.
struct FlawWitness {
  ExpansionSpec spec;
  PlaneEmbedding emb1, emb2;   // per-side embeddings; outer face carries G1∩G2
  std::string face1, face2;    // = the outer face ids of emb1/emb2
  KuratowskiWitness kuratowski;
};

struct FlawBudget {
  int max_base_vertices = 12;
};

// Exhaustive search in deterministic order: bases are planar partial cubes
// enumerated by expansion closure in increasing size, candidate side pairs
// in lexicographic order.  The enumeration has no random component, so the
// seed does not influence the result; it is part of the interface for
// reproducibility bookkeeping.
std::optional<FlawWitness> find_flaw_witness(const FlawBudget& budget = {},
                                             std::uint64_t seed = 0);

bool verify_flaw_witness(const FlawWitness& w);

// The search's base corpus: planar partial cubes grouped by vertex count,
// one representative per invariant class (vertex/edge counts, sorted
// distance rows, class sizes), found by closing {K1} under planar
// expansions.
std::vector<std::vector<Graph>> planar_partial_cube_stock(int max_vertices);

}  // namespace pcube

#pragma once

#include <map>
#include <string>
#include <vector>

#include "pcube/graph.hpp"
#include "pcube/theta.hpp"

namespace pcube {

// Two vertex sets on a base graph selecting the induced side subgraphs.
// Valid when: v1 ∪ v2 covers all vertices, every edge lies inside v1 or
// inside v2, v1 ∩ v2 is nonempty, and both sides are isometric in base.
struct ExpansionSpec {
  Graph base;
  std::vector<std::string> v1, v2;  // sorted, unique

  std::vector<std::string> intersection() const;
};

// Throws not_covering / not_isometric / empty_intersection (in that order).
void validate_spec(const ExpansionSpec& spec);
bool spec_is_valid(const ExpansionSpec& spec);

// Names for the two copies a base vertex receives in the expansion.
// A Lift overrides the default "v@1"/"v@2" naming; replay uses lifts
// recorded at contraction time so round trips reproduce original ids.
struct Lift {
  std::map<std::string, std::string> side1, side2;  // base vertex -> result vertex
};

Lift default_lift(const ExpansionSpec& spec);

Graph expand(const ExpansionSpec& spec);
Graph expand_with_lift(const ExpansionSpec& spec, const Lift& lift);

// The matching edges the expansion introduces (one per intersection vertex),
// under the same naming the expansion used.
std::vector<std::pair<std::string, std::string>> matching_edges(const ExpansionSpec& spec,
                                                                const Lift& lift);

struct ContractionResult {
  Graph quotient;
  int class_id = -1;
  std::map<std::string, int> side_of;            // original vertex -> 1/2
  std::map<std::string, std::string> image_of;   // original vertex -> quotient vertex
  std::vector<std::pair<std::string, std::string>> matching;  // (side-1, side-2) merged pairs

  std::vector<std::string> v1() const;           // images of side 1, sorted
  std::vector<std::string> v2() const;
  ExpansionSpec spec() const { return {quotient, v1(), v2()}; }
  Lift lift() const;                             // inverse of image_of, per side
};

// h must be a verified partial cube (checked; throws not_partial_cube).
ContractionResult contract_class(const Graph& h, const ThetaPartition& tp, int class_id);

// Induced subgraph on the chosen side of h minus the class cut.
Graph restrict_side(const Graph& h, const ThetaPartition& tp, int class_id, int side);

// For every class in canonical order: contraction, side-1 restriction,
// side-2 restriction.
std::vector<Graph> one_step_minors(const Graph& h);

}  // namespace pcube

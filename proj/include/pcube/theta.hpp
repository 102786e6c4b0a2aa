#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "pcube/graph.hpp"

namespace pcube {

// Edge partition under the transitive closure of the relation
//   e=xy ~ f=uv  iff  d(x,u)+d(y,v) != d(x,v)+d(y,u).
//
// Classes are kept in canonical order: sorted by their smallest contained
// edge under lexicographic vertex-name order; edges inside a class are
// sorted the same way.  side_of[c] is empty unless deleting class c leaves
// exactly two components; otherwise side_of[c][v] is 1 or 2, with side 1
// the component containing the smaller endpoint of the class's smallest edge.
struct ThetaPartition {
  std::vector<std::vector<std::pair<int, int>>> classes;
  std::vector<std::vector<int>> side_of;

  int count() const { return static_cast<int>(classes.size()); }
};

bool theta_related(const Graph& g, const std::pair<std::string, std::string>& e,
                   const std::pair<std::string, std::string>& f, const DistanceMatrix& d);
bool theta_related_by_index(const DistanceMatrix& d, std::pair<int, int> e,
                            std::pair<int, int> f);

ThetaPartition theta_classes(const Graph& g);                               // parallel pair scan
ThetaPartition theta_classes_serial(const Graph& g);                        // reference
ThetaPartition theta_classes_with(const Graph& g, const DistanceMatrix& d); // reuse metric

// Index of the class containing the given edge.
int class_of_edge(const Graph& g, const ThetaPartition& tp, std::pair<int, int> e);

// Vertex labels over {0,1}^dim stored as packed 64-bit words; bit i of
// label(v) is 0 when v lies on side 1 of class i.
struct HypercubeLabeling {
  int dim = 0;
  int words = 0;
  std::vector<std::string> vertex_order;     // graph vertex names, sorted
  std::vector<std::uint64_t> bits;           // vertex_order.size() * words

  bool bit(int vertex, int i) const {
    return (bits[static_cast<size_t>(vertex) * words + i / 64] >> (i % 64)) & 1u;
  }
  std::string label_string(int vertex) const;
  int hamming(int u, int v) const;
};

struct PcRefutation {
  enum class kind_t { not_connected, not_bipartite, labeling_failure } kind;
  // not_connected: u, v lie in different components.
  // not_bipartite: odd_cycle is a cycle of odd length.
  // labeling_failure: under the canonical side labeling, dist(u,v) differs
  // from the Hamming distance (duplicate labels surface this way too).
  std::string u, v;
  std::vector<std::string> odd_cycle;
  HypercubeLabeling labeling;
};

using RecognitionResult = std::variant<HypercubeLabeling, PcRefutation>;

// The canonical side labeling from theta_classes; defined for any connected
// bipartite graph (classes without a two-component cut get side 1 = the
// component of the reference endpoint, everything else side 2).
HypercubeLabeling build_side_labeling(const Graph& g, const ThetaPartition& tp);

RecognitionResult recognize_partial_cube(const Graph& g);

bool verify_labeling(const Graph& g, const HypercubeLabeling& lab);

// True when the recognition refutation is valid for g (recomputes the
// canonical construction for labeling failures).
bool verify_pc_refutation(const Graph& g, const PcRefutation& r);

inline bool is_partial_cube(const Graph& g) {
  return std::holds_alternative<HypercubeLabeling>(recognize_partial_cube(g));
}

}  // namespace pcube

#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pcube {

enum class errc {
  duplicate_vertex,
  unknown_vertex,
  unknown_endpoint,
  loop_edge,
  unknown_edge,
  not_connected,
  not_bipartite,
  not_partial_cube,
  unknown_class,
  not_covering,
  not_isometric,
  empty_intersection,
  invalid_rotation,
  not_genus_zero,
  unknown_face,
  not_planar_input,
  face_with_odd_cut_edges,
  not_planar,
  invalid_step,
  sampling_exhausted,
  odd_cycle_requested,
  parameter_too_small,
  parse_error,
  bad_certificate,
};

const char* errc_name(errc c);

// Library error: a named condition plus a human-readable message.
struct error : std::runtime_error {
  errc code;
  error(errc c, const std::string& msg);
};

// Immutable simple undirected graph over string vertex ids.
//
// Vertex ids are opaque to the algorithms (equality and ordering only) but
// carry provenance by construction: product vertices are named "(a,b)",
// expansion copies "a@1"/"a@2", and contraction images "a^k".  This lets
// round-trip laws be stated as labeled equality instead of isomorphism.
//
// Internally vertices are sorted and referred to by index; edges are stored
// as normalized (lo,hi) index pairs in sorted order; adjacency lists are
// sorted.  Two graphs compare equal iff they have the same vertex names and
// the same edge set over those names.
struct Graph {
  std::vector<std::string> verts;               // sorted, unique
  std::vector<std::pair<int, int>> edges;       // normalized, sorted
  std::vector<std::vector<int>> adj;            // sorted neighbor indices

  int n() const { return static_cast<int>(verts.size()); }
  int m() const { return static_cast<int>(edges.size()); }

  const std::string& name(int i) const { return verts[static_cast<size_t>(i)]; }
  std::optional<int> find(const std::string& v) const;
  int index_of(const std::string& v) const;     // throws unknown_vertex
  bool has_vertex(const std::string& v) const { return find(v).has_value(); }
  bool has_edge(int a, int b) const;
  bool has_edge(const std::string& a, const std::string& b) const;

  std::vector<std::pair<std::string, std::string>> edge_names() const;

  bool operator==(const Graph& o) const {
    return verts == o.verts && edges == o.edges;
  }
};

Graph make_graph(const std::vector<std::string>& vertex_names,
                 const std::vector<std::pair<std::string, std::string>>& edge_pairs);

// Provenance-carrying id constructors.
std::string product_id(const std::string& a, const std::string& b);   // "(a,b)"
std::string copy_id(const std::string& v, int side);                  // "v@1"/"v@2"
std::string merged_id(const std::string& side1_vertex, int class_index); // "v^k"

// Hop-count metric; infinite distances use a large finite sentinel so that
// sums never overflow.
inline constexpr std::int32_t kInfDist = std::numeric_limits<std::int32_t>::max() / 4;

struct DistanceMatrix {
  int n = 0;
  std::vector<std::int32_t> d;                  // row-major n*n
  std::int32_t at(int u, int v) const { return d[static_cast<size_t>(u) * n + v]; }
  bool connected_pair(int u, int v) const { return at(u, v) < kInfDist; }
};

DistanceMatrix all_pairs_distances(const Graph& g);          // parallel over sources
DistanceMatrix all_pairs_distances_serial(const Graph& g);   // reference implementation

// BFS distances from one source; kInfDist for unreachable vertices.
std::vector<std::int32_t> bfs_distances(const Graph& g, int source);

Graph induced_subgraph(const Graph& g, const std::vector<std::string>& s);
Graph induced_subgraph_by_index(const Graph& g, const std::vector<int>& s);

bool is_isometric_subgraph(const Graph& g, const std::vector<std::string>& s);
// Variant reusing a precomputed metric of g (hot path in spec enumeration).
bool is_isometric_subgraph_by_index(const Graph& g, const DistanceMatrix& dg,
                                    const std::vector<int>& s);

Graph cartesian_product(const Graph& g, const Graph& h);

std::vector<std::vector<std::string>> components(const Graph& g);
std::vector<std::vector<int>> components_by_index(const Graph& g);

struct BipartiteResult {
  bool ok = false;
  std::vector<int> color;                // per vertex index, 0/1 (when ok)
  std::vector<std::string> odd_cycle;    // odd-length cycle vertex sequence (when !ok)
};

BipartiteResult is_bipartite(const Graph& g);

// Rename every vertex through the given map (must be total and injective).
Graph relabel(const Graph& g, const std::map<std::string, std::string>& m);

}  // namespace pcube

#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "pcube/graph.hpp"

namespace pcube {

// Combinatorial plane embedding: cyclic neighbor order per vertex plus a
// designated outer face.  Faces are the orbits of the traversal rule
// "after arriving at v along (u,v), leave along the successor of u in
// rotation(v)"; a rotation system is planar exactly when Euler's formula
// holds per connected component.
struct PlaneEmbedding {
  std::map<std::string, std::vector<std::string>> rotation;
  std::string outer_face;
};

// A face as the cyclic vertex sequence of its directed walk; walk edges are
// (vseq[i], vseq[i+1]) cyclically.  An isolated vertex owns a trivial walk
// of length one.  The id is the lexicographically least rotation of vseq,
// joined with single spaces (vertex names never contain whitespace).
struct FaceWalk {
  std::vector<std::string> vseq;
  std::string id() const;
  bool contains(const std::string& v) const;
};

struct KuratowskiWitness {
  enum class kind_t { k5, k33 } kind = kind_t::k5;
  // k5: 5 branch vertices, 10 paths for pairs (i,j), i<j, in lex pair order.
  // k33: 3+3 branch vertices (first three = one part), 9 paths for pairs
  // (i, 3+j) in lex order.
  std::vector<std::string> branch_vertices;
  std::vector<std::vector<std::string>> paths;
};

using PlanarityResult = std::variant<PlaneEmbedding, KuratowskiWitness>;

// Always returns a verified certificate: an embedding (outer face = least
// face id) or a Kuratowski subdivision found by edge-deletion minimization.
PlanarityResult test_planarity(const Graph& g);

// Verdict only; skips certificate construction where screens allow.
bool planar_verdict(const Graph& g);

// Face walks of the rotation system.  Throws invalid_rotation when the
// rotation is not a permutation of each vertex's incidences, not_genus_zero
// when Euler's formula fails for some component.
std::vector<FaceWalk> faces(const Graph& g, const PlaneEmbedding& emb);

bool verify_embedding(const Graph& g, const PlaneEmbedding& emb);

bool verify_kuratowski(const Graph& g, const KuratowskiWitness& w);

// Kuratowski subdivision of a non-planar graph (throws not_planar... the
// inverse: throws error(not_planar_input) if g is planar).
KuratowskiWitness extract_kuratowski(const Graph& g);

// True iff some plane embedding of g puts all of s on one face; decided by
// adding an apex vertex adjacent to all of s and testing planarity.
// Throws not_planar_input when g itself is not planar.
bool common_face_realizable(const Graph& g, const std::vector<std::string>& s);

// Same rotation, different designated outer face.
PlaneEmbedding reroot_outer_face(const PlaneEmbedding& emb, const std::string& face_id);

// The graph an embedding describes (vertices = rotation keys, edges = the
// recorded incidences); lets embeddings be checked without outside context.
Graph embedding_host(const PlaneEmbedding& emb);

}  // namespace pcube

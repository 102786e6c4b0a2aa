#pragma once

#include <iosfwd>
#include <string>

#include "pcube/decompose.hpp"
#include "pcube/graph.hpp"
#include "pcube/noncrossing.hpp"
#include "pcube/planarity.hpp"
#include "pcube/theta.hpp"

namespace pcube {

// Text format:
//   graph <name>
//   <u> <v>        one line per edge
//   vertex <u>     isolated vertices only
// A token starting with '#' begins a comment; blank lines are ignored.
// Vertex names are arbitrary non-whitespace tokens (not starting with '#').
struct GraphDoc {
  std::string name;
  Graph graph;
};

GraphDoc parse_graph_text(const std::string& text);      // throws parse_error
GraphDoc parse_graph_stream(std::istream& in);
std::string print_graph_text(const GraphDoc& doc);       // parse(print(d)) == d

// JSON envelope for every machine-checkable artifact; format_version 1.
// kind selects which payload fields are meaningful.
struct CertificateFile {
  enum class kind_t { decomposition, kuratowski, pc_refutation, flaw_witness };
  kind_t kind = kind_t::decomposition;

  std::string name;                       // decomposition: graph doc name
  DecompositionCertificate decomposition;

  Graph host;                             // kuratowski / pc-refutation
  KuratowskiWitness kuratowski;
  PcRefutation pc_refutation;

  FlawWitness flaw;
};

std::string certificate_kind_name(CertificateFile::kind_t k);

std::string print_certificate_text(const CertificateFile& cert);
CertificateFile parse_certificate_text(const std::string& text);  // throws parse_error

// One-way DOT export; when emb is given, rotations become vertex comments
// and the outer face a graph comment.
std::string export_dot(const GraphDoc& doc, const PlaneEmbedding* emb = nullptr);

}  // namespace pcube

#include "pcube/io.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <set>
#include <sstream>
#include <vector>

#include "json.hpp"
#include "pcube/ops.hpp"

namespace pcube {

using oj = nlohmann::ordered_json;

// --------------------------------------------------------------------------
// Graph files.

namespace {

// A token starting with '#' begins a comment; '#' inside a name is data
// (names may not start with it), so tokenize first, then truncate.
std::vector<std::string> tokens_of(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream ss(line);
  std::string t;
  while (ss >> t) {
    if (t[0] == '#') break;
    out.push_back(t);
  }
  return out;
}

[[noreturn]] void bad_line(size_t lineno, const std::string& why) {
  throw error(errc::parse_error, "line " + std::to_string(lineno) + ": " + why);
}

}  // namespace

GraphDoc parse_graph_text(const std::string& text) {
  std::vector<std::string> names;
  std::set<std::string> seen;
  std::vector<std::pair<std::string, std::string>> edges;
  std::string doc_name;
  bool have_header = false;

  std::istringstream in(text);
  std::string line;
  size_t lineno = 0;
  auto note_vertex = [&](const std::string& v) {
    if (seen.insert(v).second) names.push_back(v);
  };
  while (std::getline(in, line)) {
    ++lineno;
    auto toks = tokens_of(line);
    if (toks.empty()) continue;
    if (!have_header) {
      if (toks.size() != 2 || toks[0] != "graph")
        bad_line(lineno, "expected header 'graph <name>'");
      doc_name = toks[1];
      have_header = true;
      continue;
    }
    if (toks[0] == "vertex") {
      if (toks.size() != 2) bad_line(lineno, "expected 'vertex <name>'");
      note_vertex(toks[1]);
      continue;
    }
    if (toks.size() != 2) bad_line(lineno, "expected an edge line '<u> <v>'");
    note_vertex(toks[0]);
    note_vertex(toks[1]);
    edges.emplace_back(toks[0], toks[1]);
  }
  if (!have_header) throw error(errc::parse_error, "missing 'graph <name>' header");
  try {
    return {doc_name, make_graph(names, edges)};
  } catch (const error& e) {
    throw error(errc::parse_error, e.what());
  }
}

GraphDoc parse_graph_stream(std::istream& in) {
  std::ostringstream all;
  all << in.rdbuf();
  return parse_graph_text(all.str());
}

std::string print_graph_text(const GraphDoc& doc) {
  std::ostringstream out;
  out << "graph " << doc.name << "\n";
  const Graph& g = doc.graph;
  std::vector<char> isolated(static_cast<size_t>(g.n()), 1);
  for (auto [a, b] : g.edges) {
    isolated[static_cast<size_t>(a)] = 0;
    isolated[static_cast<size_t>(b)] = 0;
  }
  for (int v = 0; v < g.n(); ++v)
    if (isolated[static_cast<size_t>(v)]) out << "vertex " << g.name(v) << "\n";
  for (auto [a, b] : g.edges) {
    // 'vertex' can itself name a vertex; as a line's first token it would
    // reparse as a declaration, so put it second (parsing renormalizes).
    if (g.name(a) == "vertex")
      out << g.name(b) << " " << g.name(a) << "\n";
    else
      out << g.name(a) << " " << g.name(b) << "\n";
  }
  return out.str();
}

// --------------------------------------------------------------------------
// Certificates.

namespace {

oj graph_to_json(const Graph& g) {
  oj j;
  j["vertices"] = g.verts;
  oj es = oj::array();
  for (auto [a, b] : g.edges) es.push_back(oj::array({g.name(a), g.name(b)}));
  j["edges"] = std::move(es);
  return j;
}

Graph graph_from_json(const oj& j) {
  std::vector<std::string> names = j.at("vertices").get<std::vector<std::string>>();
  std::vector<std::pair<std::string, std::string>> edges;
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2) throw error(errc::parse_error, "edge entries are pairs");
    edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
  }
  return make_graph(names, edges);
}

oj emb_to_json(const PlaneEmbedding& emb) {
  oj rot = oj::object();
  for (const auto& [v, nb] : emb.rotation) rot[v] = nb;
  oj j;
  j["rotation"] = std::move(rot);
  j["outer_face"] = emb.outer_face;
  return j;
}

PlaneEmbedding emb_from_json(const oj& j) {
  PlaneEmbedding emb;
  for (const auto& [v, nb] : j.at("rotation").items())
    emb.rotation[v] = nb.get<std::vector<std::string>>();
  emb.outer_face = j.at("outer_face").get<std::string>();
  return emb;
}

oj lab_to_json(const HypercubeLabeling& lab) {
  oj labels = oj::object();
  for (size_t v = 0; v < lab.vertex_order.size(); ++v)
    labels[lab.vertex_order[v]] = lab.label_string(static_cast<int>(v));
  oj j;
  j["dim"] = lab.dim;
  j["labels"] = std::move(labels);
  return j;
}

HypercubeLabeling lab_from_json(const oj& j) {
  HypercubeLabeling lab;
  lab.dim = j.at("dim").get<int>();
  if (lab.dim < 0) throw error(errc::parse_error, "labeling dim must be >= 0");
  lab.words = std::max(1, (lab.dim + 63) / 64);
  std::map<std::string, std::string> by_name;
  for (const auto& [v, bits] : j.at("labels").items())
    by_name[v] = bits.get<std::string>();
  lab.bits.assign(by_name.size() * static_cast<size_t>(lab.words), 0);
  int idx = 0;
  for (const auto& [v, bits] : by_name) {
    lab.vertex_order.push_back(v);
    if (static_cast<int>(bits.size()) != lab.dim)
      throw error(errc::parse_error, "label width differs from dim for vertex '" + v + "'");
    for (int i = 0; i < lab.dim; ++i) {
      if (bits[static_cast<size_t>(i)] == '1')
        lab.bits[static_cast<size_t>(idx) * lab.words + i / 64] |= 1ULL << (i % 64);
      else if (bits[static_cast<size_t>(i)] != '0')
        throw error(errc::parse_error, "labels are 0/1 strings");
    }
    ++idx;
  }
  return lab;
}

std::string kuratowski_kind_name(KuratowskiWitness::kind_t k) {
  return k == KuratowskiWitness::kind_t::k5 ? "K5" : "K33";
}

oj kuratowski_to_json(const KuratowskiWitness& w) {
  oj j;
  j["type"] = kuratowski_kind_name(w.kind);
  j["branch_vertices"] = w.branch_vertices;
  oj paths = oj::array();
  for (const auto& p : w.paths) paths.push_back(p);
  j["paths"] = std::move(paths);
  return j;
}

KuratowskiWitness kuratowski_from_json(const oj& j) {
  KuratowskiWitness w;
  std::string t = j.at("type").get<std::string>();
  if (t == "K5")
    w.kind = KuratowskiWitness::kind_t::k5;
  else if (t == "K33")
    w.kind = KuratowskiWitness::kind_t::k33;
  else
    throw error(errc::parse_error, "witness type must be K5 or K33");
  w.branch_vertices = j.at("branch_vertices").get<std::vector<std::string>>();
  for (const auto& p : j.at("paths")) w.paths.push_back(p.get<std::vector<std::string>>());
  return w;
}

oj refutation_to_json(const PcRefutation& r) {
  oj j;
  switch (r.kind) {
    case PcRefutation::kind_t::not_connected:
      j["type"] = "not-connected";
      j["u"] = r.u;
      j["v"] = r.v;
      break;
    case PcRefutation::kind_t::not_bipartite:
      j["type"] = "not-bipartite";
      j["odd_cycle"] = r.odd_cycle;
      break;
    case PcRefutation::kind_t::labeling_failure:
      j["type"] = "labeling-failure";
      j["u"] = r.u;
      j["v"] = r.v;
      j["labeling"] = lab_to_json(r.labeling);
      break;
  }
  return j;
}

PcRefutation refutation_from_json(const oj& j) {
  PcRefutation r;
  std::string t = j.at("type").get<std::string>();
  if (t == "not-connected") {
    r.kind = PcRefutation::kind_t::not_connected;
    r.u = j.at("u").get<std::string>();
    r.v = j.at("v").get<std::string>();
  } else if (t == "not-bipartite") {
    r.kind = PcRefutation::kind_t::not_bipartite;
    r.odd_cycle = j.at("odd_cycle").get<std::vector<std::string>>();
  } else if (t == "labeling-failure") {
    r.kind = PcRefutation::kind_t::labeling_failure;
    r.u = j.at("u").get<std::string>();
    r.v = j.at("v").get<std::string>();
    r.labeling = lab_from_json(j.at("labeling"));
  } else {
    throw error(errc::parse_error, "unknown refutation type '" + t + "'");
  }
  return r;
}

oj lift_side_to_json(const std::map<std::string, std::string>& side) {
  oj j = oj::object();
  for (const auto& [k, v] : side) j[k] = v;
  return j;
}

std::map<std::string, std::string> lift_side_from_json(const oj& j) {
  std::map<std::string, std::string> side;
  for (const auto& [k, v] : j.items()) side[k] = v.get<std::string>();
  return side;
}

oj step_to_json(const NonCrossingCertificate& s) {
  oj j;
  j["base"] = graph_to_json(s.spec.base);
  j["v1"] = s.spec.v1;
  j["v2"] = s.spec.v2;
  j["emb1"] = emb_to_json(s.emb1);
  j["emb2"] = emb_to_json(s.emb2);
  j["order1"] = s.order1;
  j["order2"] = s.order2;
  j["lift1"] = lift_side_to_json(s.lift.side1);
  j["lift2"] = lift_side_to_json(s.lift.side2);
  return j;
}

NonCrossingCertificate step_from_json(const oj& j) {
  NonCrossingCertificate s;
  s.spec.base = graph_from_json(j.at("base"));
  s.spec.v1 = j.at("v1").get<std::vector<std::string>>();
  s.spec.v2 = j.at("v2").get<std::vector<std::string>>();
  std::sort(s.spec.v1.begin(), s.spec.v1.end());
  std::sort(s.spec.v2.begin(), s.spec.v2.end());
  s.emb1 = emb_from_json(j.at("emb1"));
  s.emb2 = emb_from_json(j.at("emb2"));
  s.order1 = j.at("order1").get<std::vector<std::string>>();
  s.order2 = j.at("order2").get<std::vector<std::string>>();
  if (j.contains("lift1") || j.contains("lift2")) {
    s.lift.side1 = lift_side_from_json(j.at("lift1"));
    s.lift.side2 = lift_side_from_json(j.at("lift2"));
  } else {
    s.lift = default_lift(s.spec);
  }
  return s;
}

oj flaw_to_json(const FlawWitness& w) {
  oj j;
  j["base"] = graph_to_json(w.spec.base);
  j["v1"] = w.spec.v1;
  j["v2"] = w.spec.v2;
  j["emb1"] = emb_to_json(w.emb1);
  j["face1"] = w.face1;
  j["emb2"] = emb_to_json(w.emb2);
  j["face2"] = w.face2;
  j["expansion_kuratowski"] = kuratowski_to_json(w.kuratowski);
  return j;
}

FlawWitness flaw_from_json(const oj& j) {
  FlawWitness w;
  w.spec.base = graph_from_json(j.at("base"));
  w.spec.v1 = j.at("v1").get<std::vector<std::string>>();
  w.spec.v2 = j.at("v2").get<std::vector<std::string>>();
  std::sort(w.spec.v1.begin(), w.spec.v1.end());
  std::sort(w.spec.v2.begin(), w.spec.v2.end());
  w.emb1 = emb_from_json(j.at("emb1"));
  w.face1 = j.at("face1").get<std::string>();
  w.emb2 = emb_from_json(j.at("emb2"));
  w.face2 = j.at("face2").get<std::string>();
  w.kuratowski = kuratowski_from_json(j.at("expansion_kuratowski"));
  return w;
}

}  // namespace

std::string certificate_kind_name(CertificateFile::kind_t k) {
  switch (k) {
    case CertificateFile::kind_t::decomposition: return "decomposition";
    case CertificateFile::kind_t::kuratowski: return "kuratowski";
    case CertificateFile::kind_t::pc_refutation: return "pc-refutation";
    case CertificateFile::kind_t::flaw_witness: return "flaw-witness";
  }
  return "?";
}

std::string print_certificate_text(const CertificateFile& cert) {
  oj j;
  j["format_version"] = 1;
  j["kind"] = certificate_kind_name(cert.kind);
  switch (cert.kind) {
    case CertificateFile::kind_t::decomposition: {
      j["name"] = cert.name;
      oj steps = oj::array();
      for (const auto& s : cert.decomposition.steps) steps.push_back(step_to_json(s));
      j["steps"] = std::move(steps);
      j["final_labeling"] = lab_to_json(cert.decomposition.final_labeling);
      break;
    }
    case CertificateFile::kind_t::kuratowski:
      j["host"] = graph_to_json(cert.host);
      j["witness"] = kuratowski_to_json(cert.kuratowski);
      break;
    case CertificateFile::kind_t::pc_refutation:
      j["host"] = graph_to_json(cert.host);
      j["refutation"] = refutation_to_json(cert.pc_refutation);
      break;
    case CertificateFile::kind_t::flaw_witness:
      j["witness"] = flaw_to_json(cert.flaw);
      break;
  }
  return j.dump(2) + "\n";
}

CertificateFile parse_certificate_text(const std::string& text) {
  try {
    oj j = oj::parse(text);
    if (!j.is_object()) throw error(errc::parse_error, "certificate is a JSON object");
    if (j.at("format_version").get<int>() != 1)
      throw error(errc::parse_error, "unsupported format_version");
    std::string kind = j.at("kind").get<std::string>();
    CertificateFile cert;
    if (kind == "decomposition") {
      cert.kind = CertificateFile::kind_t::decomposition;
      cert.name = j.value("name", std::string{});
      for (const auto& s : j.at("steps")) cert.decomposition.steps.push_back(step_from_json(s));
      cert.decomposition.final_labeling = lab_from_json(j.at("final_labeling"));
    } else if (kind == "kuratowski") {
      cert.kind = CertificateFile::kind_t::kuratowski;
      cert.host = graph_from_json(j.at("host"));
      cert.kuratowski = kuratowski_from_json(j.at("witness"));
    } else if (kind == "pc-refutation") {
      cert.kind = CertificateFile::kind_t::pc_refutation;
      cert.host = graph_from_json(j.at("host"));
      cert.pc_refutation = refutation_from_json(j.at("refutation"));
    } else if (kind == "flaw-witness") {
      cert.kind = CertificateFile::kind_t::flaw_witness;
      cert.flaw = flaw_from_json(j.at("witness"));
    } else {
      throw error(errc::parse_error, "unknown certificate kind '" + kind + "'");
    }
    return cert;
  } catch (const error& e) {
    if (e.code == errc::parse_error) throw;
    throw error(errc::parse_error, e.what());
  } catch (const std::exception& e) {
    throw error(errc::parse_error, e.what());
  }
}

// --------------------------------------------------------------------------
// DOT.

namespace {

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::string export_dot(const GraphDoc& doc, const PlaneEmbedding* emb) {
  const Graph& g = doc.graph;
  std::ostringstream out;
  out << "graph " << dot_quote(doc.name) << " {\n";
  if (emb != nullptr) {
    if (!emb->outer_face.empty())
      out << "  // outer face: " << emb->outer_face << "\n";
    for (const auto& [v, nb] : emb->rotation) {
      std::string around;
      for (const auto& w : nb) {
        if (!around.empty()) around += ' ';
        around += w;
      }
      out << "  " << dot_quote(v) << " [comment=" << dot_quote(around) << "];\n";
    }
  } else {
    std::vector<char> isolated(static_cast<size_t>(g.n()), 1);
    for (auto [a, b] : g.edges) {
      isolated[static_cast<size_t>(a)] = 0;
      isolated[static_cast<size_t>(b)] = 0;
    }
    for (int v = 0; v < g.n(); ++v)
      if (isolated[static_cast<size_t>(v)]) out << "  " << dot_quote(g.name(v)) << ";\n";
  }
  for (auto [a, b] : g.edges)
    out << "  " << dot_quote(g.name(a)) << " -- " << dot_quote(g.name(b)) << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace pcube

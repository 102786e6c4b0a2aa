// Command-line front end: every subcommand wraps exactly one library
// operation.  Machine artifacts (graph files, certificate JSON, DOT) go to
// -o when given, else to standard output; one-line summaries go to standard
// error so pipelines stay clean.  Exit codes: 0 = property holds / success,
// 1 = property fails or a refutation was produced (still written), 2 =
// usage or parse error.
#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "pcube/decompose.hpp"
#include "pcube/generators.hpp"
#include "pcube/graph.hpp"
#include "pcube/io.hpp"
#include "pcube/noncrossing.hpp"
#include "pcube/ops.hpp"
#include "pcube/planarity.hpp"
#include "pcube/theta.hpp"

namespace {

using namespace pcube;

std::string slurp(const std::string& path) {
  if (path.empty() || path == "-") {
    std::ostringstream all;
    all << std::cin.rdbuf();
    return all.str();
  }
  std::ifstream in(path);
  if (!in) throw error(errc::parse_error, "cannot open '" + path + "'");
  std::ostringstream all;
  all << in.rdbuf();
  return all.str();
}

void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw error(errc::parse_error, "cannot write '" + out_path + "'");
  out << text;
}

GraphDoc load_graph(const std::string& path) { return parse_graph_text(slurp(path)); }

std::string join(const std::vector<std::string>& xs, const std::string& sep) {
  std::string out;
  for (const auto& x : xs) {
    if (!out.empty()) out += sep;
    out += x;
  }
  return out;
}

int cmd_recognize(const std::string& file) {
  GraphDoc doc = load_graph(file);
  auto res = recognize_partial_cube(doc.graph);
  if (const auto* lab = std::get_if<HypercubeLabeling>(&res)) {
    std::cout << "partial cube: yes\n"
              << "vertices: " << doc.graph.n() << "\n"
              << "classes: " << lab->dim << "\n";
    for (size_t v = 0; v < lab->vertex_order.size(); ++v)
      if (lab->dim > 0)
        std::cout << "label " << lab->vertex_order[v] << " "
                  << lab->label_string(static_cast<int>(v)) << "\n";
    return 0;
  }
  const auto& r = std::get<PcRefutation>(res);
  std::cout << "partial cube: no\n";
  switch (r.kind) {
    case PcRefutation::kind_t::not_connected:
      std::cout << "reason: not connected";
      if (!r.u.empty()) std::cout << " (" << r.u << " and " << r.v << " are in different components)";
      std::cout << "\n";
      break;
    case PcRefutation::kind_t::not_bipartite:
      std::cout << "reason: odd cycle: " << join(r.odd_cycle, " ") << "\n";
      break;
    case PcRefutation::kind_t::labeling_failure:
      std::cout << "reason: side labeling fails at pair (" << r.u << ", " << r.v << ")\n";
      break;
  }
  return 1;
}

int cmd_theta(const std::string& file) {
  GraphDoc doc = load_graph(file);
  ThetaPartition tp = theta_classes(doc.graph);
  std::cout << "classes: " << tp.count() << "\n";
  for (int c = 0; c < tp.count(); ++c) {
    std::cout << "class " << c << ":";
    for (auto [a, b] : tp.classes[static_cast<size_t>(c)])
      std::cout << " " << doc.graph.name(a) << "--" << doc.graph.name(b);
    std::cout << "\n";
  }
  return 0;
}

int cmd_planarity(const std::string& file, const std::string& out) {
  GraphDoc doc = load_graph(file);
  auto res = test_planarity(doc.graph);
  if (const auto* emb = std::get_if<PlaneEmbedding>(&res)) {
    std::cout << "planar: yes\n";
    for (const auto& [v, nb] : emb->rotation)
      std::cout << "rotation " << v << ":" << (nb.empty() ? "" : " ") << join(nb, " ") << "\n";
    std::cout << "outer face: " << emb->outer_face << "\n";
    return 0;
  }
  const auto& w = std::get<KuratowskiWitness>(res);
  CertificateFile cert;
  cert.kind = CertificateFile::kind_t::kuratowski;
  cert.host = doc.graph;
  cert.kuratowski = w;
  emit(out, print_certificate_text(cert));
  std::cerr << "planar: no ("
            << (w.kind == KuratowskiWitness::kind_t::k5 ? "K5" : "K33")
            << " subdivision)\n";
  return 1;
}

int cmd_contract(const std::string& file, int class_index, const std::string& out) {
  GraphDoc doc = load_graph(file);
  ThetaPartition tp = theta_classes(doc.graph);
  ContractionResult r = contract_class(doc.graph, tp, class_index);
  GraphDoc result{doc.name + "-contract" + std::to_string(class_index), r.quotient};
  emit(out, print_graph_text(result));
  std::cerr << "contracted class " << class_index << ": " << r.quotient.n() << " vertices, "
            << r.quotient.m() << " edges\n";
  return 0;
}

int cmd_expand(const std::string& file, std::vector<std::string> g1, std::vector<std::string> g2,
               const std::string& out) {
  GraphDoc doc = load_graph(file);
  ExpansionSpec spec;
  spec.base = doc.graph;
  std::sort(g1.begin(), g1.end());
  std::sort(g2.begin(), g2.end());
  g1.erase(std::unique(g1.begin(), g1.end()), g1.end());
  g2.erase(std::unique(g2.begin(), g2.end()), g2.end());
  spec.v1 = std::move(g1);
  spec.v2 = std::move(g2);
  validate_spec(spec);
  Graph h = expand(spec);
  GraphDoc result{doc.name + "-expanded", h};
  emit(out, print_graph_text(result));
  std::cerr << "expanded: " << h.n() << " vertices, " << h.m() << " edges\n";
  return 0;
}

int cmd_certify(const std::string& file, const std::string& out) {
  GraphDoc doc = load_graph(file);
  CertifyResult res = certify_planar_partial_cube(doc.graph);
  CertificateFile cert;
  if (const auto* d = std::get_if<DecompositionCertificate>(&res)) {
    cert.kind = CertificateFile::kind_t::decomposition;
    cert.name = doc.name;
    cert.decomposition = *d;
    emit(out, print_certificate_text(cert));
    std::cerr << "planar partial cube: certificate with " << d->steps.size() << " steps\n";
    return 0;
  }
  const auto& ref = std::get<Refutation>(res);
  if (const auto* pc = std::get_if<PcRefutation>(&ref.why)) {
    cert.kind = CertificateFile::kind_t::pc_refutation;
    cert.host = doc.graph;
    cert.pc_refutation = *pc;
    emit(out, print_certificate_text(cert));
    std::cerr << "refuted: not a partial cube\n";
  } else {
    const auto& w = std::get<KuratowskiWitness>(ref.why);
    cert.kind = CertificateFile::kind_t::kuratowski;
    cert.host = doc.graph;
    cert.kuratowski = w;
    emit(out, print_certificate_text(cert));
    std::cerr << "refuted: not planar ("
              << (w.kind == KuratowskiWitness::kind_t::k5 ? "K5" : "K33") << " subdivision)\n";
  }
  return 1;
}

int cmd_replay(const std::string& file, const std::string& out) {
  CertificateFile cert = parse_certificate_text(slurp(file));
  switch (cert.kind) {
    case CertificateFile::kind_t::decomposition: {
      Graph g = replay(cert.decomposition);
      GraphDoc doc{cert.name.empty() ? "replayed" : cert.name, g};
      emit(out, print_graph_text(doc));
      std::cerr << "replayed " << cert.decomposition.steps.size() << " steps: " << g.n()
                << " vertices, " << g.m() << " edges\n";
      return 0;
    }
    case CertificateFile::kind_t::kuratowski: {
      bool ok = verify_kuratowski(cert.host, cert.kuratowski);
      std::cout << "kuratowski witness: " << (ok ? "valid" : "invalid") << "\n";
      return ok ? 0 : 1;
    }
    case CertificateFile::kind_t::pc_refutation: {
      bool ok = verify_pc_refutation(cert.host, cert.pc_refutation);
      std::cout << "pc refutation: " << (ok ? "valid" : "invalid") << "\n";
      return ok ? 0 : 1;
    }
    case CertificateFile::kind_t::flaw_witness: {
      bool ok = verify_flaw_witness(cert.flaw);
      std::cout << "flaw witness: " << (ok ? "valid" : "invalid") << "\n";
      return ok ? 0 : 1;
    }
  }
  return 2;
}

int cmd_check_obstruction(const std::string& file) {
  GraphDoc doc = load_graph(file);
  bool ok = is_minimal_obstruction(doc.graph);
  std::cout << "minimal obstruction: " << (ok ? "yes" : "no") << "\n";
  return ok ? 0 : 1;
}

int cmd_find_flaw(int max_base, std::uint64_t seed, const std::string& out) {
  FlawBudget budget;
  budget.max_base_vertices = max_base;
  auto w = find_flaw_witness(budget, seed);
  if (!w) {
    std::cerr << "no flaw witness with bases up to " << max_base << " vertices\n";
    return 1;
  }
  CertificateFile cert;
  cert.kind = CertificateFile::kind_t::flaw_witness;
  cert.flaw = *w;
  emit(out, print_certificate_text(cert));
  std::cerr << "flaw witness: base with " << w->spec.base.n() << " vertices, shared set of "
            << w->spec.intersection().size() << "\n";
  return 0;
}

int cmd_generate(const std::string& family, const std::vector<int>& params, std::uint64_t seed,
                 int max_vertices, const std::string& out) {
  auto want = [&](size_t k) {
    if (params.size() != k)
      throw error(errc::parse_error, "family '" + family + "' takes " + std::to_string(k) +
                                         " integer parameter(s)");
  };
  Graph g;
  std::string name = family;
  for (int p : params) name += "-" + std::to_string(p);
  if (family == "hypercube") {
    want(1);
    g = hypercube(params[0]);
  } else if (family == "even-cycle") {
    want(1);
    g = even_cycle(params[0]);
  } else if (family == "path") {
    want(1);
    g = path_graph(params[0]);
  } else if (family == "gear") {
    want(1);
    g = gear(params[0]);
  } else if (family == "gear-obstruction") {
    want(1);
    g = gear_obstruction(params[0]);
  } else if (family == "random-partial-cube") {
    want(1);
    g = random_partial_cube(params[0], seed, max_vertices);
    name += "-seed" + std::to_string(seed);
  } else if (family == "random-planar-partial-cube") {
    want(1);
    g = random_planar_partial_cube(params[0], seed, max_vertices);
    name += "-seed" + std::to_string(seed);
  } else {
    throw error(errc::parse_error, "unknown family '" + family + "'");
  }
  emit(out, print_graph_text({name, g}));
  std::cerr << "generated " << name << ": " << g.n() << " vertices, " << g.m() << " edges\n";
  return 0;
}

int cmd_export_dot(const std::string& file, bool with_embedding, const std::string& out) {
  GraphDoc doc = load_graph(file);
  if (!with_embedding) {
    emit(out, export_dot(doc));
    return 0;
  }
  auto res = test_planarity(doc.graph);
  if (const auto* emb = std::get_if<PlaneEmbedding>(&res)) {
    emit(out, export_dot(doc, emb));
    return 0;
  }
  std::cerr << "cannot embed: graph is not planar\n";
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"planar partial cube toolkit: recognition, embedding, expansion certificates"};
  app.require_subcommand(1);

  std::string file = "-";
  std::string out;
  int class_index = 0;
  std::vector<std::string> g1, g2;
  int max_base = 12;
  int max_vertices = 0;
  std::uint64_t seed = 0;
  std::string family;
  std::vector<int> params;
  bool with_embedding = false;

  auto* recognize = app.add_subcommand("recognize", "decide partial-cube membership");
  recognize->add_option("file", file, "graph file ('-' = stdin)");

  auto* theta = app.add_subcommand("theta", "list edge classes in canonical order");
  theta->add_option("file", file, "graph file ('-' = stdin)");

  auto* planarity = app.add_subcommand("planarity", "embed or refute with a subdivision witness");
  planarity->add_option("file", file, "graph file ('-' = stdin)");
  planarity->add_option("-o,--output", out, "refutation certificate path");

  auto* contract = app.add_subcommand("contract", "contract one edge class");
  contract->add_option("file", file, "graph file ('-' = stdin)")->required();
  contract->add_option("class_index", class_index, "class in canonical order")->required();
  contract->add_option("-o,--output", out, "result graph path");

  auto* expand_cmd = app.add_subcommand("expand", "expand along two vertex sets");
  expand_cmd->add_option("file", file, "graph file ('-' = stdin)");
  expand_cmd->add_option("--g1", g1, "side-1 vertex names")->delimiter(',')->required();
  expand_cmd->add_option("--g2", g2, "side-2 vertex names")->delimiter(',')->required();
  expand_cmd->add_option("-o,--output", out, "result graph path");

  auto* certify = app.add_subcommand("certify", "decompose into expansion steps or refute");
  certify->add_option("file", file, "graph file ('-' = stdin)");
  certify->add_option("-o,--output", out, "certificate path");

  auto* replay_cmd = app.add_subcommand("replay", "replay a decomposition / validate a certificate");
  replay_cmd->add_option("cert", file, "certificate file ('-' = stdin)");
  replay_cmd->add_option("-o,--output", out, "replayed graph path");

  auto* check = app.add_subcommand("check-obstruction", "minimal non-planar partial cube?");
  check->add_option("file", file, "graph file ('-' = stdin)");

  auto* flaw = app.add_subcommand("find-flaw",
                                  "search for a 2-face expansion that breaks planarity");
  flaw->add_option("--max-base-size", max_base, "largest base vertex count");
  flaw->add_option("--seed", seed, "reproducibility bookkeeping (search is exhaustive)");
  flaw->add_option("-o,--output", out, "witness certificate path");

  auto* generate = app.add_subcommand("generate", "emit a named family member");
  generate->add_option("family", family,
                       "hypercube | even-cycle | path | gear | gear-obstruction | "
                       "random-partial-cube | random-planar-partial-cube")
      ->required();
  generate->add_option("params", params, "integer parameters");
  generate->add_option("--seed", seed, "seed for random families");
  generate->add_option("--max-vertices", max_vertices, "size cap for random families (0 = none)");
  generate->add_option("-o,--output", out, "graph path");

  auto* dot = app.add_subcommand("export-dot", "write DOT (one-way)");
  dot->add_option("file", file, "graph file ('-' = stdin)");
  dot->add_flag("--embedding", with_embedding, "annotate with a planar rotation system");
  dot->add_option("-o,--output", out, "DOT path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp") return app.exit(e);
    app.exit(e);
    return 2;
  }

  try {
    if (app.got_subcommand(recognize)) return cmd_recognize(file);
    if (app.got_subcommand(theta)) return cmd_theta(file);
    if (app.got_subcommand(planarity)) return cmd_planarity(file, out);
    if (app.got_subcommand(contract)) return cmd_contract(file, class_index, out);
    if (app.got_subcommand(expand_cmd)) return cmd_expand(file, g1, g2, out);
    if (app.got_subcommand(certify)) return cmd_certify(file, out);
    if (app.got_subcommand(replay_cmd)) return cmd_replay(file, out);
    if (app.got_subcommand(check)) return cmd_check_obstruction(file);
    if (app.got_subcommand(flaw)) return cmd_find_flaw(max_base, seed, out);
    if (app.got_subcommand(generate)) return cmd_generate(family, params, seed, max_vertices, out);
    if (app.got_subcommand(dot)) return cmd_export_dot(file, with_embedding, out);
  } catch (const error& e) {
    std::cerr << "error: " << errc_name(e.code) << ": " << e.what() << "\n";
    switch (e.code) {
      case errc::parse_error:
      case errc::parameter_too_small:
      case errc::odd_cycle_requested:
      case errc::unknown_class:
      case errc::unknown_vertex:
        return 2;
      default:
        return 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

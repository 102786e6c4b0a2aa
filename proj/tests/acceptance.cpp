// End-to-end acceptance harness.  Each criterion prints one PASS/FAIL line
// with its runtime; the exit code is the number of failed criteria.  Shared
// corpora flow forward: criterion 2 re-certifies every sample from criterion
// 1, criterion 3 re-checks every certificate from criterion 2.
#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"
#include "oracle.hpp"
#include "pcube/decompose.hpp"
#include "pcube/generators.hpp"
#include "pcube/graph.hpp"
#include "pcube/io.hpp"
#include "pcube/noncrossing.hpp"
#include "pcube/ops.hpp"
#include "pcube/planarity.hpp"
#include "pcube/rng.hpp"
#include "pcube/theta.hpp"
#include "util.hpp"

using namespace pcube;

namespace {

std::vector<Graph> g_samples;                 // built by criterion 1
std::vector<NonCrossingCertificate> g_certs;  // built by criterion 2

Graph sample_planar_pc(int steps, std::uint64_t seed) {
  for (;;) {
    try {
      return random_planar_partial_cube(steps, seed);
    } catch (const error& e) {
      if (e.code != errc::sampling_exhausted) throw;
      ++seed;  // dead-end stream; take the next one
    }
  }
}

bool criterion1(std::string& why) {
  for (int i = 0; i < 200; ++i) {
    Graph g = sample_planar_pc(1 + i % 8, 5000 + static_cast<std::uint64_t>(i));
    CertifyResult res = certify_planar_partial_cube(g);
    const auto* cert = std::get_if<DecompositionCertificate>(&res);
    if (cert == nullptr) {
      why = "sample " + std::to_string(i) + " was refuted";
      return false;
    }
    if (cert->steps.size() != static_cast<size_t>(theta_classes(g).count())) {
      why = "sample " + std::to_string(i) + ": step count != class count";
      return false;
    }
    if (!(replay(*cert) == g)) {
      why = "sample " + std::to_string(i) + ": replay differs from the input";
      return false;
    }
    g_samples.push_back(std::move(g));
  }
  return true;
}

bool criterion2(std::string& why) {
  std::vector<Graph> corpus = g_samples;
  corpus.push_back(hypercube(3));
  for (int n = 4; n <= 12; n += 2) corpus.push_back(even_cycle(n));

  for (const Graph& g : corpus) {
    ThetaPartition tp = theta_classes(g);
    for (int c = 0; c < tp.count(); ++c) {
      NonCrossingCertificate cert;
      try {
        cert = extract_noncrossing_step(g, tp, c);
      } catch (const error& e) {
        why = "extraction failed on a " + std::to_string(g.n()) + "-vertex graph, class " +
              std::to_string(c) + ": " + e.what();
        return false;
      }
      if (!verify_noncrossing(cert)) {
        why = "certificate for class " + std::to_string(c) + " of a " +
              std::to_string(g.n()) + "-vertex graph failed verification";
        return false;
      }
      g_certs.push_back(std::move(cert));
    }
  }
  return !g_certs.empty();
}

bool criterion3(std::string& why) {
  for (size_t i = 0; i < g_certs.size(); ++i) {
    const auto& cert = g_certs[i];
    Graph h = expand_with_lift(cert.spec, cert.lift);
    PlanarityResult res = test_planarity(h);
    const auto* emb = std::get_if<PlaneEmbedding>(&res);
    if (emb == nullptr) {
      why = "certificate " + std::to_string(i) + " expands to a non-planar graph";
      return false;
    }
    if (!verify_embedding(h, *emb)) {
      why = "embedding for certificate " + std::to_string(i) + " failed its check";
      return false;
    }
  }
  return true;
}

bool criterion4(std::string& why) {
  auto w = find_flaw_witness(FlawBudget{});
  if (!w) {
    why = "no witness within the default budget";
    return false;
  }
  if (!verify_flaw_witness(*w)) {
    why = "witness failed verification";
    return false;
  }
  if (!verify_kuratowski(expand(w->spec), w->kuratowski)) {
    why = "witness subdivision does not live in the expansion";
    return false;
  }
  return true;
}

bool criterion5(std::string& why) {
  for (int n : {3, 4, 5}) {
    Graph ob = gear_obstruction(n);
    if (!is_partial_cube(ob)) {
      why = "gear_obstruction(" + std::to_string(n) + ") not recognized";
      return false;
    }
    if (planar_verdict(ob)) {
      why = "gear_obstruction(" + std::to_string(n) + ") claimed planar";
      return false;
    }
    if (!is_minimal_obstruction(ob)) {
      why = "gear_obstruction(" + std::to_string(n) + ") not minimal";
      return false;
    }
  }
  Graph q4 = hypercube(4);
  if (!is_partial_cube(q4) || planar_verdict(q4)) {
    why = "hypercube(4) misclassified";
    return false;
  }
  if (is_minimal_obstruction(hypercube(5))) {
    why = "hypercube(5) wrongly claimed minimal";
    return false;
  }
  return true;
}

bool planarity_matches_oracle(const Graph& g, std::string& why) {
  PlanarityResult res = test_planarity(g);
  bool verdict;
  if (const auto* emb = std::get_if<PlaneEmbedding>(&res)) {
    verdict = true;
    if (!verify_embedding(g, *emb)) {
      why = "embedding failed verification";
      return false;
    }
  } else {
    verdict = false;
    if (!verify_kuratowski(g, std::get<KuratowskiWitness>(res))) {
      why = "subdivision witness failed verification";
      return false;
    }
  }
  if (verdict != testoracle::oracle_planar(g)) {
    why = "verdict disagrees with the subdivision-search oracle";
    return false;
  }
  return true;
}

bool criterion6(std::string& why) {
  SplitMix64 rng(2026);
  for (int i = 0; i < 10000; ++i) {
    int n = 3 + static_cast<int>(rng.below(5));
    int pct = 20 + static_cast<int>(rng.below(61));
    Graph g = testutil::random_connected_graph(n, pct, rng);
    if (!planarity_matches_oracle(g, why)) {
      why = "random graph " + std::to_string(i) + ": " + why;
      return false;
    }
  }
  std::vector<Graph> named;
  for (int d = 0; d <= 4; ++d) named.push_back(hypercube(d));
  for (int n = 4; n <= 16; n += 2) named.push_back(even_cycle(n));
  for (int n = 1; n <= 16; ++n) named.push_back(path_graph(n));
  for (int n = 3; n <= 7; ++n) named.push_back(gear(n));
  named.push_back(gear_obstruction(3));
  for (const Graph& g : named) {
    if (!planarity_matches_oracle(g, why)) {
      why = "named graph with " + std::to_string(g.n()) + " vertices: " + why;
      return false;
    }
  }
  return true;
}

bool criterion7(std::string& why) {
  std::vector<Graph> accepted;
  for (int d = 0; d <= 5; ++d) accepted.push_back(hypercube(d));
  for (int n = 4; n <= 12; n += 2) accepted.push_back(even_cycle(n));
  for (int n = 1; n <= 8; ++n) accepted.push_back(path_graph(n));
  SplitMix64 rng(7);
  for (int i = 0; i < 5; ++i)
    accepted.push_back(testutil::random_connected_graph(6 + i, 0, rng));  // trees
  for (const Graph& g : accepted) {
    auto res = recognize_partial_cube(g);
    const auto* lab = std::get_if<HypercubeLabeling>(&res);
    if (lab == nullptr || !verify_labeling(g, *lab)) {
      why = "a " + std::to_string(g.n()) + "-vertex member was not accepted";
      return false;
    }
  }

  std::vector<Graph> refused;
  refused.push_back(make_graph({"0", "1", "2", "3", "4"},
                               {{"0", "1"}, {"1", "2"}, {"2", "3"}, {"3", "4"}, {"4", "0"}}));
  refused.push_back(make_graph({"a", "b", "c", "d"}, {{"a", "b"}, {"a", "c"}, {"a", "d"},
                                                      {"b", "c"}, {"b", "d"}, {"c", "d"}}));
  refused.push_back(make_graph({"u1", "u2", "w1", "w2", "w3"},
                               {{"u1", "w1"}, {"u1", "w2"}, {"u1", "w3"},
                                {"u2", "w1"}, {"u2", "w2"}, {"u2", "w3"}}));
  for (const Graph& g : refused) {
    auto res = recognize_partial_cube(g);
    const auto* ref = std::get_if<PcRefutation>(&res);
    if (ref == nullptr || !verify_pc_refutation(g, *ref)) {
      why = "a " + std::to_string(g.n()) + "-vertex non-member slipped through";
      return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// CLI round trips.

std::string g_dir;

int run_cli(const std::string& args) {
  std::string cmd = std::string(PCUBE_CLI_PATH) + " " + args;
  int st = std::system(cmd.c_str());
  if (st == -1 || !WIFEXITED(st)) return -1;
  return WEXITSTATUS(st);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream all;
  all << in.rdbuf();
  return all.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  out << text;
}

bool criterion8(std::string& why) {
  char tmpl[] = "/tmp/pcube-accept-XXXXXX";
  if (mkdtemp(tmpl) == nullptr) {
    why = "cannot create a scratch directory";
    return false;
  }
  g_dir = tmpl;
  const std::string d = g_dir;
  auto fail = [&](const std::string& msg) {
    why = msg;
    return false;
  };

  // generate -> certify -> replay reproduces the graph file byte for byte
  for (const std::string& gen :
       {std::string("hypercube 3"), std::string("even-cycle 8"), std::string("path 7"),
        std::string("gear 4")}) {
    if (run_cli("generate " + gen + " -o " + d + "/g.graph 2>/dev/null") != 0)
      return fail("generate " + gen + " failed");
    if (run_cli("certify " + d + "/g.graph -o " + d + "/g.cert 2>/dev/null") != 0)
      return fail("certify failed on " + gen);
    if (run_cli("replay " + d + "/g.cert -o " + d + "/g.replayed 2>/dev/null") != 0)
      return fail("replay failed on " + gen);
    if (read_file(d + "/g.replayed") != read_file(d + "/g.graph"))
      return fail("replay of " + gen + " is not byte-identical");
  }

  // certificates are written deterministically
  if (run_cli("generate hypercube 3 -o " + d + "/q3.graph 2>/dev/null") != 0)
    return fail("generate hypercube 3 failed");
  run_cli("certify " + d + "/q3.graph -o " + d + "/a.cert 2>/dev/null");
  run_cli("certify " + d + "/q3.graph -o " + d + "/b.cert 2>/dev/null");
  if (read_file(d + "/a.cert").empty() || read_file(d + "/a.cert") != read_file(d + "/b.cert"))
    return fail("repeated certify runs differ");

  // refutation path: exit 1, artifact still written and self-validating
  if (run_cli("generate gear-obstruction 3 -o " + d + "/ob3.graph 2>/dev/null") != 0)
    return fail("generate gear-obstruction 3 failed");
  if (run_cli("certify " + d + "/ob3.graph -o " + d + "/ob3.cert 2>/dev/null") != 1)
    return fail("certify of a non-planar graph should exit 1");
  if (run_cli("replay " + d + "/ob3.cert > " + d + "/ob3.verdict 2>/dev/null") != 0)
    return fail("validating the refutation certificate failed");
  if (read_file(d + "/ob3.verdict").find("kuratowski witness: valid") == std::string::npos)
    return fail("refutation verdict line missing");
  if (run_cli("check-obstruction " + d + "/ob3.graph >/dev/null 2>&1") != 0)
    return fail("check-obstruction rejected gear-obstruction 3");

  // tampering is caught on replay with a step diagnostic
  auto j = nlohmann::json::parse(read_file(d + "/a.cert"));
  auto& order2 = j["steps"].back()["order2"];
  std::swap(order2[0], order2[1]);
  write_file(d + "/tampered.cert", j.dump());
  if (run_cli("replay " + d + "/tampered.cert -o /dev/null 2>" + d + "/err.txt") != 1)
    return fail("tampered certificate should exit 1");
  if (read_file(d + "/err.txt").find("invalid-step") == std::string::npos)
    return fail("tampered replay did not name the failing step");

  // comments, blank lines, and isolated vertices parse; DOT export succeeds
  write_file(d + "/messy.graph",
             "# demo file\n"
             "graph messy\n"
             "\n"
             "a b # an edge\n"
             "b c\n"
             "vertex lonely\n");
  if (run_cli("export-dot " + d + "/messy.graph -o " + d + "/messy.dot 2>/dev/null") != 0)
    return fail("a commented graph file did not parse");

  // usage and parse problems exit 2
  if (run_cli("generate even-cycle 5 -o /dev/null 2>/dev/null") != 2)
    return fail("odd cycle request should exit 2");
  if (run_cli("recognize " + d + "/does-not-exist.graph 2>/dev/null") != 2)
    return fail("missing input should exit 2");
  write_file(d + "/broken.graph", "no header here\n");
  if (run_cli("recognize " + d + "/broken.graph 2>/dev/null") != 2)
    return fail("malformed input should exit 2");
  if (run_cli("no-such-command 2>/dev/null") != 2) return fail("unknown subcommand should exit 2");

  // stdin/stdout pipelines
  std::string pipeline = std::string(PCUBE_CLI_PATH) + " generate hypercube 2 2>/dev/null | " +
                         std::string(PCUBE_CLI_PATH) + " recognize - > " + d +
                         "/pipe.txt 2>/dev/null";
  int st = std::system(pipeline.c_str());
  if (st == -1 || !WIFEXITED(st) || WEXITSTATUS(st) != 0) return fail("pipeline failed");
  if (read_file(d + "/pipe.txt").find("partial cube: yes") == std::string::npos)
    return fail("pipeline output missing the verdict");

  return true;
}

}  // namespace

int main() {
  struct Row {
    int id;
    const char* label;
    double limit_s;
    std::function<bool(std::string&)> fn;
  };
  const std::vector<Row> rows = {
      {1, "decompose and replay 200 random samples", 60, criterion1},
      {2, "per-class step certificates across the corpus", 60, criterion2},
      {3, "every step certificate expands planar", 60, criterion3},
      {4, "counterexample search at the default budget", 600, criterion4},
      {5, "obstruction family and hypercube classification", 60, criterion5},
      {6, "planarity agrees with the subdivision oracle", 600, criterion6},
      {7, "recognition suite", 10, criterion7},
      {8, "command-line round trips and exit codes", 600, criterion8},
  };

  int failures = 0;
  for (const auto& row : rows) {
    std::string why;
    auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = row.fn(why);
    } catch (const std::exception& e) {
      why = std::string("unexpected exception: ") + e.what();
    }
    double sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (ok && sec > row.limit_s) {
      ok = false;
      why = "over the " + std::to_string(static_cast<int>(row.limit_s)) + "s budget";
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2fs", sec);
    std::cout << "criterion " << row.id << " (" << row.label << "): " << (ok ? "PASS" : "FAIL")
              << " (" << buf << ")\n";
    if (!ok) {
      std::cout << "  reason: " << why << "\n";
      ++failures;
    }
  }
  return failures;
}

#include <functional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "doctest.h"
#include "oracle.hpp"
#include "pcube/generators.hpp"
#include "pcube/graph.hpp"
#include "pcube/planarity.hpp"
#include "pcube/rng.hpp"
#include "util.hpp"

using namespace pcube;

namespace {

Graph complete(int n) {
  std::vector<std::string> names;
  std::vector<std::pair<std::string, std::string>> edges;
  for (int i = 0; i < n; ++i) names.push_back("k" + std::to_string(i));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      edges.emplace_back(names[static_cast<size_t>(i)], names[static_cast<size_t>(j)]);
  return make_graph(names, edges);
}

Graph complete_bipartite(int a, int b) {
  std::vector<std::string> names;
  std::vector<std::pair<std::string, std::string>> edges;
  for (int i = 0; i < a; ++i) names.push_back("u" + std::to_string(i));
  for (int j = 0; j < b; ++j) names.push_back("w" + std::to_string(j));
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j)
      edges.emplace_back("u" + std::to_string(i), "w" + std::to_string(j));
  return make_graph(names, edges);
}

Graph petersen() {
  std::vector<std::string> names;
  std::vector<std::pair<std::string, std::string>> edges;
  for (int i = 0; i < 10; ++i) names.push_back("p" + std::to_string(i));
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back("p" + std::to_string(i), "p" + std::to_string((i + 1) % 5));
    edges.emplace_back("p" + std::to_string(5 + i), "p" + std::to_string(5 + (i + 2) % 5));
    edges.emplace_back("p" + std::to_string(i), "p" + std::to_string(5 + i));
  }
  return make_graph(names, edges);
}

}  // namespace

TEST_CASE("small planar graphs embed with the right face counts") {
  struct Row {
    Graph g;
    size_t face_count;
  };
  std::vector<Row> rows;
  rows.push_back({complete(4), 4});
  rows.push_back({even_cycle(6), 2});
  rows.push_back({hypercube(3), 6});
  rows.push_back({path_graph(5), 1});
  rows.push_back({gear(4), 5});  // 9 - 12 + 5 = 2: four inner quads and the rim
  for (const auto& row : rows) {
    auto res = test_planarity(row.g);
    REQUIRE(std::holds_alternative<PlaneEmbedding>(res));
    const auto& emb = std::get<PlaneEmbedding>(res);
    CHECK(verify_embedding(row.g, emb));
    auto fs = faces(row.g, emb);
    CHECK(fs.size() == row.face_count);
    // the designated outer face is the least face id
    std::string least;
    for (const auto& f : fs) {
      std::string id = f.id();
      if (least.empty() || id < least) least = id;
    }
    CHECK(emb.outer_face == least);
  }
}

TEST_CASE("non-planar classics produce verified witnesses") {
  Graph k5 = complete(5);
  auto r5 = test_planarity(k5);
  REQUIRE(std::holds_alternative<KuratowskiWitness>(r5));
  CHECK(std::get<KuratowskiWitness>(r5).kind == KuratowskiWitness::kind_t::k5);
  CHECK(verify_kuratowski(k5, std::get<KuratowskiWitness>(r5)));

  Graph k33 = complete_bipartite(3, 3);
  auto r33 = test_planarity(k33);
  REQUIRE(std::holds_alternative<KuratowskiWitness>(r33));
  CHECK(std::get<KuratowskiWitness>(r33).kind == KuratowskiWitness::kind_t::k33);
  CHECK(verify_kuratowski(k33, std::get<KuratowskiWitness>(r33)));

  // 3-regular, so any witness must be a K33 subdivision
  Graph pet = petersen();
  auto rp = test_planarity(pet);
  REQUIRE(std::holds_alternative<KuratowskiWitness>(rp));
  CHECK(std::get<KuratowskiWitness>(rp).kind == KuratowskiWitness::kind_t::k33);
  CHECK(verify_kuratowski(pet, std::get<KuratowskiWitness>(rp)));

  Graph q4 = hypercube(4);
  auto rq = test_planarity(q4);
  REQUIRE(std::holds_alternative<KuratowskiWitness>(rq));
  CHECK(verify_kuratowski(q4, std::get<KuratowskiWitness>(rq)));
}

TEST_CASE("disconnected and degenerate graphs") {
  Graph empty = make_graph({}, {});
  CHECK(planar_verdict(empty));

  Graph dots = make_graph({"a", "b", "c"}, {});
  auto res = test_planarity(dots);
  REQUIRE(std::holds_alternative<PlaneEmbedding>(res));
  CHECK(faces(dots, std::get<PlaneEmbedding>(res)).size() == 3);

  // two disjoint triangles: planar, Euler per component
  Graph two = make_graph({"a", "b", "c", "x", "y", "z"},
                         {{"a", "b"}, {"b", "c"}, {"c", "a"}, {"x", "y"}, {"y", "z"}, {"z", "x"}});
  auto r2 = test_planarity(two);
  REQUIRE(std::holds_alternative<PlaneEmbedding>(r2));
  CHECK(verify_embedding(two, std::get<PlaneEmbedding>(r2)));

  // K5 plus a far-away dot still has the witness
  Graph k5dot = make_graph({"k0", "k1", "k2", "k3", "k4", "dot"},
                           {{"k0", "k1"}, {"k0", "k2"}, {"k0", "k3"}, {"k0", "k4"},
                            {"k1", "k2"}, {"k1", "k3"}, {"k1", "k4"},
                            {"k2", "k3"}, {"k2", "k4"}, {"k3", "k4"}});
  auto rk = test_planarity(k5dot);
  REQUIRE(std::holds_alternative<KuratowskiWitness>(rk));
  CHECK(verify_kuratowski(k5dot, std::get<KuratowskiWitness>(rk)));
}

TEST_CASE("faces validate their rotation systems") {
  Graph c4 = even_cycle(4);
  auto emb = std::get<PlaneEmbedding>(test_planarity(c4));

  PlaneEmbedding broken = emb;
  broken.rotation.begin()->second.pop_back();
  CHECK_THROWS_AS(faces(c4, broken), error);

  // a valid rotation of K5 exists but can never satisfy Euler
  Graph k5 = complete(5);
  PlaneEmbedding sorted_rot;
  for (int v = 0; v < k5.n(); ++v) {
    std::vector<std::string> nb;
    for (int w : k5.adj[static_cast<size_t>(v)]) nb.push_back(k5.name(w));
    sorted_rot.rotation[k5.name(v)] = nb;
  }
  try {
    faces(k5, sorted_rot);
    FAIL("expected not_genus_zero");
  } catch (const error& e) {
    CHECK(e.code == errc::not_genus_zero);
  }
  CHECK_FALSE(verify_embedding(k5, sorted_rot));
}

TEST_CASE("witness verification rejects tampering") {
  Graph k5 = complete(5);
  auto w = std::get<KuratowskiWitness>(test_planarity(k5));
  REQUIRE(verify_kuratowski(k5, w));

  auto wrong_kind = w;
  wrong_kind.kind = KuratowskiWitness::kind_t::k33;
  CHECK_FALSE(verify_kuratowski(k5, wrong_kind));

  auto missing_path = w;
  missing_path.paths.pop_back();
  CHECK_FALSE(verify_kuratowski(k5, missing_path));

  auto dup_branch = w;
  dup_branch.branch_vertices[0] = dup_branch.branch_vertices[1];
  CHECK_FALSE(verify_kuratowski(k5, dup_branch));

  auto fake_edge = w;
  fake_edge.paths[0] = {fake_edge.paths[0].front(), "k9", fake_edge.paths[0].back()};
  CHECK_FALSE(verify_kuratowski(k5, fake_edge));

  // internal vertices may not repeat across paths
  Graph k33 = complete_bipartite(3, 3);
  auto w33 = std::get<KuratowskiWitness>(test_planarity(k33));
  auto shared = w33;
  // route two paths through a fabricated common internal vertex: reuse an
  // existing branch vertex as internal, which must be rejected
  shared.paths[0] = {shared.paths[0].front(), shared.branch_vertices[2], shared.paths[0].back()};
  CHECK_FALSE(verify_kuratowski(k33, shared));
}

TEST_CASE("extraction works on dense hosts and rejects planar input") {
  // K6 contains both kinds; extraction must return a clean verified witness
  Graph k6 = complete(6);
  auto w = extract_kuratowski(k6);
  CHECK(verify_kuratowski(k6, w));
  try {
    extract_kuratowski(even_cycle(4));
    FAIL("expected not_planar_input");
  } catch (const error& e) {
    CHECK(e.code == errc::not_planar_input);
  }
}

TEST_CASE("common face realizability") {
  Graph c4 = even_cycle(4);
  CHECK(common_face_realizable(c4, c4.verts));
  CHECK(common_face_realizable(c4, {"c0", "c2"}));

  // every face of K4 is a triangle: all four vertices never share a face
  Graph k4 = complete(4);
  CHECK(common_face_realizable(k4, {"k0", "k1", "k2"}));
  CHECK_FALSE(common_face_realizable(k4, k4.verts));

  try {
    common_face_realizable(complete(5), {"k0"});
    FAIL("expected not_planar_input");
  } catch (const error& e) {
    CHECK(e.code == errc::not_planar_input);
  }
}

TEST_CASE("rerooting and host recovery") {
  Graph q3 = hypercube(3);
  auto emb = std::get<PlaneEmbedding>(test_planarity(q3));
  auto fs = faces(q3, emb);
  REQUIRE(fs.size() == 6);
  for (const auto& f : fs) {
    PlaneEmbedding re = reroot_outer_face(emb, f.id());
    CHECK(re.outer_face == f.id());
    CHECK(verify_embedding(q3, re));
  }
  try {
    reroot_outer_face(emb, "no such face");
    FAIL("expected unknown_face");
  } catch (const error& e) {
    CHECK(e.code == errc::unknown_face);
  }
  CHECK(embedding_host(emb) == q3);
}

TEST_CASE("verdicts match the brute-force oracle on random graphs") {
  SplitMix64 rng(1234);
  int checked = 0, nonplanar = 0;
  for (int t = 0; t < 600; ++t) {
    int n = 3 + static_cast<int>(rng.below(5));  // 3..7 vertices
    int pct = 20 + static_cast<int>(rng.below(70));
    Graph g = testutil::random_graph(n, pct, rng);
    bool ours = planar_verdict(g);
    bool oracle = testoracle::oracle_planar(g);
    CHECK(ours == oracle);
    ++checked;
    if (!oracle) ++nonplanar;
    // certificates verify in both directions
    auto res = test_planarity(g);
    if (const auto* emb = std::get_if<PlaneEmbedding>(&res))
      CHECK(verify_embedding(g, *emb));
    else
      CHECK(verify_kuratowski(g, std::get<KuratowskiWitness>(res)));
  }
  CHECK(checked == 600);
  CHECK(nonplanar > 20);  // the sample actually exercises both answers
}

#include <functional>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "pcube/graph.hpp"
#include "pcube/rng.hpp"
#include "util.hpp"

using namespace pcube;

namespace {

errc thrown_code(const std::function<void()>& f) {
  try {
    f();
  } catch (const error& e) {
    return e.code;
  }
  FAIL("expected an error");
  return errc::parse_error;
}

}  // namespace

TEST_CASE("make_graph validates names and edges") {
  CHECK(thrown_code([] { make_graph({"a", "a"}, {}); }) == errc::duplicate_vertex);
  CHECK(thrown_code([] { make_graph({"a"}, {{"a", "b"}}); }) == errc::unknown_endpoint);
  CHECK(thrown_code([] { make_graph({"a"}, {{"a", "a"}}); }) == errc::loop_edge);
  CHECK(thrown_code([] { make_graph({"a b"}, {}); }) == errc::parse_error);
  CHECK(thrown_code([] { make_graph({""}, {}); }) == errc::parse_error);
  CHECK(thrown_code([] { make_graph({"#a"}, {}); }) == errc::parse_error);
  CHECK(make_graph({"a#b"}, {}).n() == 1);  // '#' is only banned up front
}

TEST_CASE("vertices sort, edges normalize and dedupe") {
  Graph g = make_graph({"b", "a", "c"}, {{"c", "a"}, {"a", "c"}, {"b", "c"}});
  CHECK(g.n() == 3);
  CHECK(g.m() == 2);
  CHECK(g.verts == std::vector<std::string>{"a", "b", "c"});
  CHECK(g.has_edge("a", "c"));
  CHECK(g.has_edge("c", "b"));
  CHECK_FALSE(g.has_edge("a", "b"));
  CHECK(g.index_of("b") == 1);
  CHECK(thrown_code([&] { g.index_of("zz"); }) == errc::unknown_vertex);
  // equality is by names and edge set, independent of input order
  Graph h = make_graph({"c", "b", "a"}, {{"b", "c"}, {"a", "c"}});
  CHECK(g == h);
}

TEST_CASE("bfs distances on paths and cycles") {
  Graph p = make_graph({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}, {"c", "d"}});
  auto d = bfs_distances(p, p.index_of("a"));
  CHECK(d[static_cast<size_t>(p.index_of("d"))] == 3);
  Graph two = make_graph({"x", "y"}, {});
  auto d2 = bfs_distances(two, two.index_of("x"));
  CHECK(d2[static_cast<size_t>(two.index_of("y"))] == kInfDist);
}

TEST_CASE("parallel all-pairs distances equal the serial reference") {
  SplitMix64 rng(7);
  for (int t = 0; t < 40; ++t) {
    Graph g = testutil::random_graph(2 + static_cast<int>(rng.below(18)), 25, rng);
    DistanceMatrix a = all_pairs_distances(g);
    DistanceMatrix b = all_pairs_distances_serial(g);
    CHECK(a.n == b.n);
    CHECK(a.d == b.d);
  }
}

TEST_CASE("components") {
  Graph g = make_graph({"a", "b", "c", "d", "e"}, {{"a", "b"}, {"c", "d"}});
  auto comps = components(g);
  CHECK(comps.size() == 3);
  std::set<size_t> sizes;
  for (const auto& c : comps) sizes.insert(c.size());
  CHECK(sizes == std::set<size_t>{1, 2});
}

TEST_CASE("bipartite detection with certificates") {
  Graph c6 = make_graph({"0", "1", "2", "3", "4", "5"},
                        {{"0", "1"}, {"1", "2"}, {"2", "3"}, {"3", "4"}, {"4", "5"}, {"5", "0"}});
  auto r6 = is_bipartite(c6);
  REQUIRE(r6.ok);
  for (auto [a, b] : c6.edges)
    CHECK(r6.color[static_cast<size_t>(a)] != r6.color[static_cast<size_t>(b)]);

  Graph c5 = make_graph({"0", "1", "2", "3", "4"},
                        {{"0", "1"}, {"1", "2"}, {"2", "3"}, {"3", "4"}, {"4", "0"}});
  auto r5 = is_bipartite(c5);
  REQUIRE_FALSE(r5.ok);
  const auto& cyc = r5.odd_cycle;
  REQUIRE(cyc.size() >= 3);
  CHECK(cyc.size() % 2 == 1);
  std::set<std::string> distinct(cyc.begin(), cyc.end());
  CHECK(distinct.size() == cyc.size());
  for (size_t i = 0; i < cyc.size(); ++i)
    CHECK(c5.has_edge(cyc[i], cyc[(i + 1) % cyc.size()]));
}

TEST_CASE("induced subgraphs and isometry") {
  Graph c6 = make_graph({"0", "1", "2", "3", "4", "5"},
                        {{"0", "1"}, {"1", "2"}, {"2", "3"}, {"3", "4"}, {"4", "5"}, {"5", "0"}});
  Graph sub = induced_subgraph(c6, {"0", "1", "2", "3"});
  CHECK(sub.n() == 4);
  CHECK(sub.m() == 3);
  CHECK(is_isometric_subgraph(c6, {"0", "1", "2", "3"}));
  // five consecutive cycle vertices: endpoints are at distance 2 via the
  // missing vertex, 4 inside the path
  CHECK_FALSE(is_isometric_subgraph(c6, {"0", "1", "2", "3", "4"}));
  // disconnected induced subgraph of a connected host
  CHECK_FALSE(is_isometric_subgraph(c6, {"0", "2"}));
  CHECK(thrown_code([&] { induced_subgraph(c6, {"nope"}); }) == errc::unknown_vertex);
}

TEST_CASE("cartesian product") {
  Graph k2a = make_graph({"x", "y"}, {{"x", "y"}});
  Graph k2b = make_graph({"0", "1"}, {{"0", "1"}});
  Graph q2 = cartesian_product(k2a, k2b);
  CHECK(q2.n() == 4);
  CHECK(q2.m() == 4);
  CHECK(q2.has_vertex("(x,0)"));
  CHECK(q2.has_edge("(x,0)", "(x,1)"));
  CHECK(q2.has_edge("(x,0)", "(y,0)"));
  CHECK_FALSE(q2.has_edge("(x,0)", "(y,1)"));
  for (const auto& row : q2.adj) CHECK(row.size() == 2);
}

TEST_CASE("relabel") {
  Graph g = make_graph({"a", "b"}, {{"a", "b"}});
  Graph h = relabel(g, {{"a", "u"}, {"b", "w"}});
  CHECK(h.has_edge("u", "w"));
  CHECK(thrown_code([&] { relabel(g, {{"a", "u"}}); }) == errc::unknown_vertex);
}

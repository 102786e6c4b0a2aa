#include "pcube/generators.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "pcube/ops.hpp"
#include "pcube/planarity.hpp"
#include "pcube/rng.hpp"

namespace pcube {

namespace {

std::string padded(const std::string& prefix, int i, int count) {
  int width = 1;
  for (int x = count - 1; x >= 10; x /= 10) ++width;
  std::string t = std::to_string(i);
  return prefix + std::string(static_cast<size_t>(width) - t.size(), '0') + t;
}

}  // namespace

Graph hypercube(int d) {
  if (d < 0) throw error(errc::parameter_too_small, "hypercube dimension must be >= 0");
  if (d == 0) return make_graph({"0"}, {});
  int n = 1 << d;
  auto word = [&](int v) {
    std::string w(static_cast<size_t>(d), '0');
    for (int b = 0; b < d; ++b)
      if (v >> b & 1) w[static_cast<size_t>(d - 1 - b)] = '1';
    return w;
  };
  std::vector<std::string> names;
  names.reserve(static_cast<size_t>(n));
  for (int v = 0; v < n; ++v) names.push_back(word(v));
  std::vector<std::pair<std::string, std::string>> edges;
  for (int v = 0; v < n; ++v)
    for (int b = 0; b < d; ++b)
      if (!(v >> b & 1)) edges.emplace_back(word(v), word(v | (1 << b)));
  return make_graph(names, edges);
}

Graph even_cycle(int n) {
  if (n % 2 != 0) throw error(errc::odd_cycle_requested, "cycle length must be even");
  if (n < 4) throw error(errc::parameter_too_small, "cycle length must be >= 4");
  std::vector<std::string> names;
  std::vector<std::pair<std::string, std::string>> edges;
  for (int i = 0; i < n; ++i) names.push_back(padded("c", i, n));
  for (int i = 0; i < n; ++i) edges.emplace_back(names[static_cast<size_t>(i)],
                                                 names[static_cast<size_t>((i + 1) % n)]);
  return make_graph(names, edges);
}

Graph path_graph(int n) {
  if (n < 1) throw error(errc::parameter_too_small, "path needs at least one vertex");
  std::vector<std::string> names;
  std::vector<std::pair<std::string, std::string>> edges;
  for (int i = 0; i < n; ++i) names.push_back(padded("p", i, n));
  for (int i = 0; i + 1 < n; ++i)
    edges.emplace_back(names[static_cast<size_t>(i)], names[static_cast<size_t>(i + 1)]);
  return make_graph(names, edges);
}

Graph gear(int n) {
  if (n < 3) throw error(errc::parameter_too_small, "gear parameter must be >= 3");
  int rim = 2 * n;
  std::vector<std::string> names{"h"};
  for (int i = 0; i < rim; ++i) names.push_back(padded("r", i, rim));
  std::vector<std::pair<std::string, std::string>> edges;
  for (int i = 0; i < rim; ++i)
    edges.emplace_back(names[static_cast<size_t>(1 + i)],
                       names[static_cast<size_t>(1 + (i + 1) % rim)]);
  for (int i = 0; i < rim; i += 2) edges.emplace_back("h", names[static_cast<size_t>(1 + i)]);
  return make_graph(names, edges);
}

Graph gear_obstruction(int n) {
  Graph k2 = make_graph({"0", "1"}, {{"0", "1"}});
  return cartesian_product(gear(n), k2);
}

namespace {

Graph sample_partial_cube(int steps, std::uint64_t seed, int max_vertices, bool planar_only) {
  if (steps < 0) throw error(errc::parameter_too_small, "steps must be >= 0");
  SplitMix64 rng(seed);
  Graph g = make_graph({"v0"}, {});
  for (int s = 0; s < steps; ++s) {
    bool advanced = false;
    for (int attempt = 0; attempt < 200 && !advanced; ++attempt) {
      int n = g.n();
      int root = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
      int target = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));

      // v1: random connected set grown from root.
      std::vector<char> in_v1(static_cast<size_t>(n), 0);
      std::vector<int> v1{root};
      in_v1[static_cast<size_t>(root)] = 1;
      while (static_cast<int>(v1.size()) < target) {
        std::vector<int> cand;
        for (int u : v1)
          for (int w : g.adj[static_cast<size_t>(u)])
            if (!in_v1[static_cast<size_t>(w)]) cand.push_back(w);
        if (cand.empty()) break;
        int w = cand[rng.below(cand.size())];
        in_v1[static_cast<size_t>(w)] = 1;
        v1.push_back(w);
      }

      // v2 = V minus a subset of v1, repaired so edges leaving v1 stay
      // covered: a dropped vertex may not have neighbors outside v1.
      std::vector<char> dropped(static_cast<size_t>(n), 0);
      for (int u : v1) dropped[static_cast<size_t>(u)] = rng.coin() ? 1 : 0;
      for (int u : v1) {
        if (!dropped[static_cast<size_t>(u)]) continue;
        for (int w : g.adj[static_cast<size_t>(u)])
          if (!in_v1[static_cast<size_t>(w)]) {
            dropped[static_cast<size_t>(u)] = 0;
            break;
          }
      }

      ExpansionSpec spec;
      spec.base = g;
      for (int v : v1) spec.v1.push_back(g.name(v));
      for (int v = 0; v < n; ++v)
        if (!dropped[static_cast<size_t>(v)]) spec.v2.push_back(g.name(v));
      std::sort(spec.v1.begin(), spec.v1.end());
      std::sort(spec.v2.begin(), spec.v2.end());

      if (max_vertices > 0 &&
          static_cast<int>(spec.v1.size() + spec.v2.size()) > max_vertices)
        continue;
      if (!spec_is_valid(spec)) continue;
      Graph h = expand(spec);
      if (planar_only && !planar_verdict(h)) continue;
      g = std::move(h);
      advanced = true;
    }
    if (!advanced)
      throw error(errc::sampling_exhausted,
                  "no viable expansion after 200 attempts at step " + std::to_string(s));
  }
  return g;
}

}  // namespace

Graph random_partial_cube(int steps, std::uint64_t seed, int max_vertices) {
  return sample_partial_cube(steps, seed, max_vertices, false);
}

Graph random_planar_partial_cube(int steps, std::uint64_t seed, int max_vertices) {
  return sample_partial_cube(steps, seed, max_vertices, true);
}

}  // namespace pcube

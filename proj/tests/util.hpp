#pragma once

#include <string>
#include <vector>

#include "pcube/graph.hpp"
#include "pcube/rng.hpp"

namespace testutil {

inline std::vector<std::string> letter_names(int n) {
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back("a" + std::to_string(i));
  return names;
}

// Erdos-Renyi-ish: each pair is an edge with probability pct/100.
inline pcube::Graph random_graph(int n, int pct, pcube::SplitMix64& rng) {
  auto names = letter_names(n);
  std::vector<std::pair<std::string, std::string>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (static_cast<int>(rng.below(100)) < pct) edges.emplace_back(names[i], names[j]);
  return pcube::make_graph(names, edges);
}

// Random graph plus a random spanning tree, so it is always connected.
inline pcube::Graph random_connected_graph(int n, int pct, pcube::SplitMix64& rng) {
  auto names = letter_names(n);
  std::vector<std::pair<std::string, std::string>> edges;
  for (int i = 1; i < n; ++i)
    edges.emplace_back(names[static_cast<size_t>(rng.below(static_cast<std::uint64_t>(i)))],
                       names[static_cast<size_t>(i)]);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (static_cast<int>(rng.below(100)) < pct) edges.emplace_back(names[i], names[j]);
  return pcube::make_graph(names, edges);
}

}  // namespace testutil

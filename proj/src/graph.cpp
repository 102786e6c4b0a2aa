#include "pcube/graph.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace pcube {

const char* errc_name(errc c) {
  switch (c) {
    case errc::duplicate_vertex: return "duplicate-vertex";
    case errc::unknown_vertex: return "unknown-vertex";
    case errc::unknown_endpoint: return "unknown-endpoint";
    case errc::loop_edge: return "loop-edge";
    case errc::unknown_edge: return "unknown-edge";
    case errc::not_connected: return "not-connected";
    case errc::not_bipartite: return "not-bipartite";
    case errc::not_partial_cube: return "not-partial-cube";
    case errc::unknown_class: return "unknown-class";
    case errc::not_covering: return "not-covering";
    case errc::not_isometric: return "not-isometric";
    case errc::empty_intersection: return "empty-intersection";
    case errc::invalid_rotation: return "invalid-rotation";
    case errc::not_genus_zero: return "not-genus-zero";
    case errc::unknown_face: return "unknown-face";
    case errc::not_planar_input: return "not-planar-input";
    case errc::face_with_odd_cut_edges: return "face-with-odd-cut-edges";
    case errc::not_planar: return "not-planar";
    case errc::invalid_step: return "invalid-step";
    case errc::sampling_exhausted: return "sampling-exhausted";
    case errc::odd_cycle_requested: return "odd-cycle-requested";
    case errc::parameter_too_small: return "parameter-too-small";
    case errc::parse_error: return "parse-error";
    case errc::bad_certificate: return "bad-certificate";
  }
  return "unknown";
}

error::error(errc c, const std::string& msg)
    : std::runtime_error(std::string(errc_name(c)) + ": " + msg), code(c) {}

std::optional<int> Graph::find(const std::string& v) const {
  auto it = std::lower_bound(verts.begin(), verts.end(), v);
  if (it == verts.end() || *it != v) return std::nullopt;
  return static_cast<int>(it - verts.begin());
}

int Graph::index_of(const std::string& v) const {
  auto i = find(v);
  if (!i) throw error(errc::unknown_vertex, "no vertex named '" + v + "'");
  return *i;
}

bool Graph::has_edge(int a, int b) const {
  const auto& nb = adj[static_cast<size_t>(a)];
  return std::binary_search(nb.begin(), nb.end(), b);
}

bool Graph::has_edge(const std::string& a, const std::string& b) const {
  auto ia = find(a), ib = find(b);
  return ia && ib && has_edge(*ia, *ib);
}

std::vector<std::pair<std::string, std::string>> Graph::edge_names() const {
  std::vector<std::pair<std::string, std::string>> out;
  out.reserve(edges.size());
  for (auto [a, b] : edges) out.emplace_back(name(a), name(b));
  return out;
}

static void check_name(const std::string& v) {
  if (v.empty()) throw error(errc::parse_error, "empty vertex name");
  if (v[0] == '#')
    throw error(errc::parse_error, "vertex name '" + v + "' starts with the comment marker");
  for (char c : v) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r')
      throw error(errc::parse_error, "vertex name '" + v + "' contains whitespace");
  }
}

Graph make_graph(const std::vector<std::string>& vertex_names,
                 const std::vector<std::pair<std::string, std::string>>& edge_pairs) {
  Graph g;
  g.verts = vertex_names;
  for (const auto& v : g.verts) check_name(v);
  std::sort(g.verts.begin(), g.verts.end());
  auto dup = std::adjacent_find(g.verts.begin(), g.verts.end());
  if (dup != g.verts.end())
    throw error(errc::duplicate_vertex, "vertex '" + *dup + "' given twice");

  std::set<std::pair<int, int>> es;
  for (const auto& [a, b] : edge_pairs) {
    auto ia = g.find(a);
    if (!ia) throw error(errc::unknown_endpoint, "edge endpoint '" + a + "' is not a vertex");
    auto ib = g.find(b);
    if (!ib) throw error(errc::unknown_endpoint, "edge endpoint '" + b + "' is not a vertex");
    if (*ia == *ib) throw error(errc::loop_edge, "loop at vertex '" + a + "'");
    es.insert(std::minmax(*ia, *ib));
  }
  g.edges.assign(es.begin(), es.end());
  g.adj.assign(g.verts.size(), {});
  for (auto [a, b] : g.edges) {
    g.adj[static_cast<size_t>(a)].push_back(b);
    g.adj[static_cast<size_t>(b)].push_back(a);
  }
  for (auto& nb : g.adj) std::sort(nb.begin(), nb.end());
  return g;
}

std::string product_id(const std::string& a, const std::string& b) {
  return "(" + a + "," + b + ")";
}

std::string copy_id(const std::string& v, int side) {
  return v + "@" + std::to_string(side);
}

std::string merged_id(const std::string& side1_vertex, int class_index) {
  return side1_vertex + "^" + std::to_string(class_index);
}

std::vector<std::int32_t> bfs_distances(const Graph& g, int source) {
  std::vector<std::int32_t> dist(static_cast<size_t>(g.n()), kInfDist);
  std::deque<int> q;
  dist[static_cast<size_t>(source)] = 0;
  q.push_back(source);
  while (!q.empty()) {
    int u = q.front();
    q.pop_front();
    for (int w : g.adj[static_cast<size_t>(u)]) {
      if (dist[static_cast<size_t>(w)] == kInfDist) {
        dist[static_cast<size_t>(w)] = dist[static_cast<size_t>(u)] + 1;
        q.push_back(w);
      }
    }
  }
  return dist;
}

DistanceMatrix all_pairs_distances_serial(const Graph& g) {
  DistanceMatrix dm;
  dm.n = g.n();
  dm.d.assign(static_cast<size_t>(dm.n) * dm.n, kInfDist);
  for (int s = 0; s < dm.n; ++s) {
    auto row = bfs_distances(g, s);
    std::copy(row.begin(), row.end(), dm.d.begin() + static_cast<size_t>(s) * dm.n);
  }
  return dm;
}

DistanceMatrix all_pairs_distances(const Graph& g) {
  DistanceMatrix dm;
  dm.n = g.n();
  dm.d.assign(static_cast<size_t>(dm.n) * dm.n, kInfDist);
#pragma omp parallel for schedule(dynamic)
  for (int s = 0; s < dm.n; ++s) {
    auto row = bfs_distances(g, s);
    std::copy(row.begin(), row.end(), dm.d.begin() + static_cast<size_t>(s) * dm.n);
  }
  return dm;
}

Graph induced_subgraph_by_index(const Graph& g, const std::vector<int>& s) {
  std::vector<std::string> names;
  names.reserve(s.size());
  for (int i : s) {
    if (i < 0 || i >= g.n()) throw error(errc::unknown_vertex, "vertex index out of range");
    names.push_back(g.name(i));
  }
  std::sort(names.begin(), names.end());
  auto du = std::adjacent_find(names.begin(), names.end());
  if (du != names.end()) throw error(errc::duplicate_vertex, "vertex '" + *du + "' given twice");

  std::set<int> in(s.begin(), s.end());
  std::vector<std::pair<std::string, std::string>> es;
  for (auto [a, b] : g.edges)
    if (in.count(a) && in.count(b)) es.emplace_back(g.name(a), g.name(b));
  return make_graph(names, es);
}

Graph induced_subgraph(const Graph& g, const std::vector<std::string>& s) {
  std::vector<int> idx;
  idx.reserve(s.size());
  for (const auto& v : s) idx.push_back(g.index_of(v));
  return induced_subgraph_by_index(g, idx);
}

bool is_isometric_subgraph_by_index(const Graph& g, const DistanceMatrix& dg,
                                    const std::vector<int>& s) {
  Graph sub = induced_subgraph_by_index(g, s);
  DistanceMatrix ds = all_pairs_distances_serial(sub);
  for (int i = 0; i < sub.n(); ++i) {
    int gi = g.index_of(sub.name(i));
    for (int j = i + 1; j < sub.n(); ++j) {
      int gj = g.index_of(sub.name(j));
      if (ds.at(i, j) != dg.at(gi, gj)) return false;
    }
  }
  return true;
}

bool is_isometric_subgraph(const Graph& g, const std::vector<std::string>& s) {
  std::vector<int> idx;
  idx.reserve(s.size());
  for (const auto& v : s) idx.push_back(g.index_of(v));
  return is_isometric_subgraph_by_index(g, all_pairs_distances(g), idx);
}

Graph cartesian_product(const Graph& g, const Graph& h) {
  std::vector<std::string> names;
  names.reserve(static_cast<size_t>(g.n()) * h.n());
  for (int i = 0; i < g.n(); ++i)
    for (int j = 0; j < h.n(); ++j) names.push_back(product_id(g.name(i), h.name(j)));

  std::vector<std::pair<std::string, std::string>> es;
  for (int i = 0; i < g.n(); ++i)
    for (auto [x, y] : h.edges)
      es.emplace_back(product_id(g.name(i), h.name(x)), product_id(g.name(i), h.name(y)));
  for (auto [u, v] : g.edges)
    for (int j = 0; j < h.n(); ++j)
      es.emplace_back(product_id(g.name(u), h.name(j)), product_id(g.name(v), h.name(j)));
  return make_graph(names, es);
}

std::vector<std::vector<int>> components_by_index(const Graph& g) {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(static_cast<size_t>(g.n()), 0);
  for (int s = 0; s < g.n(); ++s) {
    if (seen[static_cast<size_t>(s)]) continue;
    std::vector<int> comp{s};
    seen[static_cast<size_t>(s)] = 1;
    for (size_t k = 0; k < comp.size(); ++k)
      for (int w : g.adj[static_cast<size_t>(comp[k])])
        if (!seen[static_cast<size_t>(w)]) {
          seen[static_cast<size_t>(w)] = 1;
          comp.push_back(w);
        }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

std::vector<std::vector<std::string>> components(const Graph& g) {
  std::vector<std::vector<std::string>> out;
  for (const auto& comp : components_by_index(g)) {
    std::vector<std::string> names;
    names.reserve(comp.size());
    for (int i : comp) names.push_back(g.name(i));
    out.push_back(std::move(names));
  }
  return out;
}

BipartiteResult is_bipartite(const Graph& g) {
  BipartiteResult r;
  r.color.assign(static_cast<size_t>(g.n()), -1);
  std::vector<int> parent(static_cast<size_t>(g.n()), -1);
  for (int s = 0; s < g.n(); ++s) {
    if (r.color[static_cast<size_t>(s)] != -1) continue;
    r.color[static_cast<size_t>(s)] = 0;
    std::deque<int> q{s};
    while (!q.empty()) {
      int u = q.front();
      q.pop_front();
      for (int w : g.adj[static_cast<size_t>(u)]) {
        if (r.color[static_cast<size_t>(w)] == -1) {
          r.color[static_cast<size_t>(w)] = 1 - r.color[static_cast<size_t>(u)];
          parent[static_cast<size_t>(w)] = u;
          q.push_back(w);
        } else if (r.color[static_cast<size_t>(w)] == r.color[static_cast<size_t>(u)]) {
          // Odd closed walk through u and w; shrink to a simple odd cycle by
          // joining the two BFS tree paths at their lowest common ancestor.
          std::vector<int> pu{u}, pw{w};
          auto depth = [&](int x) {
            int d = 0;
            while (parent[static_cast<size_t>(x)] != -1) {
              x = parent[static_cast<size_t>(x)];
              ++d;
            }
            return d;
          };
          int du = depth(u), dw = depth(w);
          int a = u, b = w;
          while (du > dw) { a = parent[static_cast<size_t>(a)]; pu.push_back(a); --du; }
          while (dw > du) { b = parent[static_cast<size_t>(b)]; pw.push_back(b); --dw; }
          while (a != b) {
            a = parent[static_cast<size_t>(a)];
            pu.push_back(a);
            b = parent[static_cast<size_t>(b)];
            pw.push_back(b);
          }
          // pu ends at the LCA, pw too; cycle = pu + reverse(pw minus LCA).
          r.ok = false;
          for (int x : pu) r.odd_cycle.push_back(g.name(x));
          for (size_t k = pw.size() - 1; k-- > 0;) r.odd_cycle.push_back(g.name(pw[k]));
          return r;
        }
      }
    }
  }
  r.ok = true;
  return r;
}

Graph relabel(const Graph& g, const std::map<std::string, std::string>& m) {
  std::vector<std::string> names;
  names.reserve(static_cast<size_t>(g.n()));
  for (const auto& v : g.verts) {
    auto it = m.find(v);
    if (it == m.end()) throw error(errc::unknown_vertex, "relabel map misses '" + v + "'");
    names.push_back(it->second);
  }
  std::vector<std::pair<std::string, std::string>> es;
  es.reserve(g.edges.size());
  for (auto [a, b] : g.edges)
    es.emplace_back(m.at(g.name(a)), m.at(g.name(b)));
  return make_graph(names, es);
}

}  // namespace pcube

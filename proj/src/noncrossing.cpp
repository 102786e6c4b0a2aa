#include "pcube/noncrossing.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace pcube {

CutCycleOrder cut_cycle_order(const Graph& h, const PlaneEmbedding& emb,
                              const ThetaPartition& tp, int class_id) {
  if (class_id < 0 || class_id >= tp.count())
    throw error(errc::unknown_class, "class index " + std::to_string(class_id) +
                                         " out of range (have " + std::to_string(tp.count()) + ")");
  const auto& cls = tp.classes[static_cast<size_t>(class_id)];
  const auto& side = tp.side_of[static_cast<size_t>(class_id)];
  if (side.empty())
    throw error(errc::face_with_odd_cut_edges, "class cut does not split the graph in two");

  auto oriented = [&](std::pair<int, int> e) {
    int s1 = side[static_cast<size_t>(e.first)] == 1 ? e.first : e.second;
    int s2 = s1 == e.first ? e.second : e.first;
    return std::make_pair(h.name(s1), h.name(s2));
  };

  CutCycleOrder out;
  out.class_id = class_id;
  if (cls.size() == 1) {
    out.order.push_back(oriented(cls[0]));
    return out;
  }

  auto fs = faces(h, emb);
  std::set<std::pair<int, int>> in_class(cls.begin(), cls.end());

  // Per face: which class edges lie on it; every count must be 0 or 2.
  std::map<std::pair<int, int>, std::vector<int>> faces_of_edge;
  for (size_t f = 0; f < fs.size(); ++f) {
    const auto& seq = fs[f].vseq;
    std::vector<std::pair<int, int>> here;
    for (size_t i = 0; i < seq.size(); ++i) {
      auto a = h.index_of(seq[i]);
      auto b = h.index_of(seq[(i + 1) % seq.size()]);
      std::pair<int, int> e{std::min(a, b), std::max(a, b)};
      if (in_class.count(e)) here.push_back(e);
    }
    if (here.size() != 0 && here.size() != 2)
      throw error(errc::face_with_odd_cut_edges,
                  "face '" + fs[f].id() + "' meets " + std::to_string(here.size()) +
                      " cut edges");
    for (auto e : here) faces_of_edge[e].push_back(static_cast<int>(f));
  }
  for (auto e : cls)
    if (faces_of_edge[e].size() != 2)
      throw error(errc::face_with_odd_cut_edges, "cut edge is not on exactly two faces");

  // Walk the dual cycle: from (edge, face) step to the other class edge on
  // that face, then cross it to its other face.
  auto e0 = cls.front();
  int f0 = std::min(faces_of_edge[e0][0], faces_of_edge[e0][1]);
  auto cur_e = e0;
  int cur_f = f0;
  while (true) {
    out.order.push_back(oriented(cur_e));
    // The other class edge on cur_f.
    std::pair<int, int> nxt{-1, -1};
    for (size_t i = 0; i < fs[static_cast<size_t>(cur_f)].vseq.size(); ++i) {
      const auto& seq = fs[static_cast<size_t>(cur_f)].vseq;
      auto a = h.index_of(seq[i]);
      auto b = h.index_of(seq[(i + 1) % seq.size()]);
      std::pair<int, int> e{std::min(a, b), std::max(a, b)};
      if (in_class.count(e) && e != cur_e) nxt = e;
    }
    if (nxt.first < 0)
      throw error(errc::face_with_odd_cut_edges, "cut edge meets a face twice");
    if (nxt == e0) break;
    cur_e = nxt;
    const auto& ff = faces_of_edge[cur_e];
    cur_f = ff[0] == cur_f ? ff[1] : ff[0];
  }
  if (out.order.size() != cls.size())
    throw error(errc::face_with_odd_cut_edges, "cut dual is not a single cycle");
  return out;
}

NonCrossingCertificate extract_noncrossing_step(const Graph& h, const ThetaPartition& tp,
                                                int class_id) {
  if (!is_partial_cube(h))
    throw error(errc::not_partial_cube, "step extraction needs a partial cube");
  auto pr = test_planarity(h);
  if (std::holds_alternative<KuratowskiWitness>(pr))
    throw error(errc::not_planar, "step extraction needs a planar graph");
  const auto& emb = std::get<PlaneEmbedding>(pr);

  CutCycleOrder cut = cut_cycle_order(h, emb, tp, class_id);
  ContractionResult r = contract_class(h, tp, class_id);

  NonCrossingCertificate cert;
  cert.spec = r.spec();
  cert.lift = r.lift();

  // Side embeddings: restrict the rotation system of h to one side (the
  // matching neighbors disappear) and rename through the contraction images.
  auto side_embedding = [&](int side) {
    PlaneEmbedding se;
    for (const auto& [v, s] : r.side_of) {
      if (s != side) continue;
      std::vector<std::string> nb;
      for (const auto& w : emb.rotation.at(v))
        if (r.side_of.at(w) == side) nb.push_back(r.image_of.at(w));
      se.rotation[r.image_of.at(v)] = std::move(nb);
    }
    return se;
  };
  cert.emb1 = side_embedding(1);
  cert.emb2 = side_embedding(2);

  // Shared vertices in cut-cycle order, named in the base.
  std::vector<std::string> shared = cert.spec.intersection();
  std::set<std::string> shared_set(shared.begin(), shared.end());
  for (const auto& [s1, s2] : cut.order) cert.order1.push_back(r.image_of.at(s1));
  cert.order2.assign(cert.order1.rbegin(), cert.order1.rend());

  // Outer faces: the (least) face carrying every shared vertex; removing one
  // side merges the faces crossed by the dual cycle into such a face.
  auto pick_outer = [&](PlaneEmbedding& se, const std::vector<std::string>& vs) {
    Graph host = induced_subgraph(cert.spec.base, vs);
    std::string best;
    for (const auto& f : faces(host, se)) {
      bool all = true;
      for (const auto& v : shared_set)
        if (!f.contains(v)) {
          all = false;
          break;
        }
      if (!all) continue;
      std::string id = f.id();
      if (best.empty() || id < best) best = std::move(id);
    }
    if (best.empty())
      throw error(errc::unknown_face, "no side face carries the shared subgraph");
    se.outer_face = best;
  };
  pick_outer(cert.emb1, cert.spec.v1);
  pick_outer(cert.emb2, cert.spec.v2);

  if (!verify_noncrossing(cert))
    throw error(errc::bad_certificate, "extracted step failed self-verification");
  return cert;
}

namespace {

bool cyclic_reverse_equal(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  if (a.size() != b.size()) return false;
  if (a.empty()) return true;
  std::vector<std::string> r(b.rbegin(), b.rend());
  for (size_t shift = 0; shift < a.size(); ++shift) {
    bool ok = true;
    for (size_t i = 0; i < a.size(); ++i)
      if (a[i] != r[(i + shift) % r.size()]) {
        ok = false;
        break;
      }
    if (ok) return true;
  }
  return false;
}

bool is_permutation_of(const std::vector<std::string>& seq, const std::set<std::string>& want) {
  if (seq.size() != want.size()) return false;
  std::set<std::string> got(seq.begin(), seq.end());
  return got == want;
}

}  // namespace

bool verify_noncrossing(const NonCrossingCertificate& cert) {
  try {
    validate_spec(cert.spec);
  } catch (const error&) {
    return false;
  }
  std::vector<std::string> shared = cert.spec.intersection();
  std::set<std::string> shared_set(shared.begin(), shared.end());

  auto side_ok = [&](const std::vector<std::string>& vs, const PlaneEmbedding& se) {
    Graph host = induced_subgraph(cert.spec.base, vs);
    if (!verify_embedding(host, se)) return false;
    if (se.outer_face.empty()) return false;
    for (const auto& f : faces(host, se))
      if (f.id() == se.outer_face) {
        for (const auto& v : shared_set)
          if (!f.contains(v)) return false;
        return true;
      }
    return false;
  };
  try {
    if (!side_ok(cert.spec.v1, cert.emb1)) return false;
    if (!side_ok(cert.spec.v2, cert.emb2)) return false;
  } catch (const error&) {
    return false;
  }

  if (shared.size() <= 2) return true;
  if (!is_permutation_of(cert.order1, shared_set)) return false;
  if (!is_permutation_of(cert.order2, shared_set)) return false;
  return cyclic_reverse_equal(cert.order1, cert.order2);
}

bool is_noncrossing_expansion(const ExpansionSpec& spec) {
  validate_spec(spec);
  return planar_verdict(expand(spec));
}

bool is_two_face_expansion(const ExpansionSpec& spec) {
  validate_spec(spec);
  std::vector<std::string> shared = spec.intersection();
  Graph g1 = induced_subgraph(spec.base, spec.v1);
  Graph g2 = induced_subgraph(spec.base, spec.v2);
  return common_face_realizable(g1, shared) && common_face_realizable(g2, shared);
}

// ---------------------------------------------------------------------------
// Flaw search.

namespace {

// Cheap isomorphism-grade invariant for the stock corpus (exact on every
// planar partial cube with at most nine vertices; collisions beyond merely
// thin the corpus, never break determinism).
std::string stock_invariant(const Graph& g) {
  DistanceMatrix d = all_pairs_distances_serial(g);
  std::vector<std::vector<std::int32_t>> rows;
  rows.reserve(static_cast<size_t>(g.n()));
  for (int u = 0; u < g.n(); ++u) {
    std::vector<std::int32_t> row;
    row.reserve(static_cast<size_t>(g.n()));
    for (int v = 0; v < g.n(); ++v) row.push_back(d.at(u, v));
    std::sort(row.begin(), row.end());
    rows.push_back(std::move(row));
  }
  std::sort(rows.begin(), rows.end());

  ThetaPartition tp = theta_classes_with(g, d);
  std::vector<size_t> cls;
  cls.reserve(tp.classes.size());
  for (const auto& c : tp.classes) cls.push_back(c.size());
  std::sort(cls.begin(), cls.end());

  std::string inv = std::to_string(g.n()) + "|" + std::to_string(g.m()) + "|r:";
  for (const auto& row : rows) {
    for (auto x : row) inv += std::to_string(x) + ",";
    inv += ";";
  }
  inv += "|c:";
  for (auto s : cls) inv += std::to_string(s) + ",";
  return inv;
}

Graph canonical_relabel(const Graph& g) {
  int width = 1;
  for (int x = g.n() - 1; x >= 10; x /= 10) ++width;
  std::map<std::string, std::string> m;
  for (int i = 0; i < g.n(); ++i) {
    std::string t = std::to_string(i);
    m[g.name(i)] = "v" + std::string(static_cast<size_t>(width) - t.size(), '0') + t;
  }
  return relabel(g, m);
}

// All valid side pairs of a base graph, in lexicographic (v1, v2) order with
// v1 <= v2 (the swapped pair describes the same expansion with the copies
// exchanged).  Every valid pair has the form v1 = S ∪ A, v2 = S ∪ B where
// S is the shared set and A, B partition the components of base − S: an
// edge between the private parts would lie in neither side.
std::vector<std::pair<std::vector<int>, std::vector<int>>> enum_side_pairs(
    const Graph& g, const DistanceMatrix& d) {
  int n = g.n();
  std::vector<std::pair<std::vector<int>, std::vector<int>>> out;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    std::vector<int> s;
    std::vector<char> in_s(static_cast<size_t>(n), 0);
    for (int v = 0; v < n; ++v)
      if (mask >> v & 1) {
        s.push_back(v);
        in_s[static_cast<size_t>(v)] = 1;
      }

    // Components of g − S.
    std::vector<std::vector<int>> comps;
    std::vector<char> seen(static_cast<size_t>(n), 0);
    for (int v = 0; v < n; ++v) {
      if (in_s[static_cast<size_t>(v)] || seen[static_cast<size_t>(v)]) continue;
      std::vector<int> comp{v};
      seen[static_cast<size_t>(v)] = 1;
      for (size_t k = 0; k < comp.size(); ++k)
        for (int w : g.adj[static_cast<size_t>(comp[k])])
          if (!in_s[static_cast<size_t>(w)] && !seen[static_cast<size_t>(w)]) {
            seen[static_cast<size_t>(w)] = 1;
            comp.push_back(w);
          }
      comps.push_back(std::move(comp));
    }
    if (comps.size() > 20) continue;  // cannot happen at search scale

    for (std::uint32_t assign = 0; assign < (1u << comps.size()); ++assign) {
      std::vector<int> v1 = s, v2 = s;
      for (size_t c = 0; c < comps.size(); ++c) {
        auto& side = (assign >> c & 1) ? v2 : v1;
        side.insert(side.end(), comps[c].begin(), comps[c].end());
      }
      std::sort(v1.begin(), v1.end());
      std::sort(v2.begin(), v2.end());
      if (v2 < v1) continue;  // keep one of the two symmetric descriptions
      if (!is_isometric_subgraph_by_index(g, d, v1)) continue;
      if (!is_isometric_subgraph_by_index(g, d, v2)) continue;
      out.emplace_back(std::move(v1), std::move(v2));
    }
  }
  // Lexicographic by (v1, v2) as name lists = index lists (vertices sorted).
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

ExpansionSpec make_spec(const Graph& g, const std::vector<int>& v1, const std::vector<int>& v2) {
  ExpansionSpec spec;
  spec.base = g;
  for (int v : v1) spec.v1.push_back(g.name(v));
  for (int v : v2) spec.v2.push_back(g.name(v));
  return spec;
}

struct Stock {
  std::vector<std::vector<Graph>> by_size;  // index = vertex count
  std::set<std::string> invariants;

  explicit Stock(int max_vertices) : by_size(static_cast<size_t>(max_vertices) + 1) {
    if (max_vertices >= 1) {
      Graph k1 = make_graph({"v0"}, {});
      invariants.insert(stock_invariant(k1));
      by_size[1].push_back(k1);
    }
  }

  void offer(const Graph& h) {
    int n = h.n();
    if (n >= static_cast<int>(by_size.size())) return;
    std::string inv = stock_invariant(h);
    if (invariants.insert(inv).second) by_size[static_cast<size_t>(n)].push_back(canonical_relabel(h));
  }
};

FlawWitness package_witness(const ExpansionSpec& spec, const Graph& h) {
  FlawWitness w;
  w.spec = spec;
  std::vector<std::string> shared = spec.intersection();
  std::set<std::string> shared_set(shared.begin(), shared.end());

  // Embed side + apex, then drop the apex: the faces around it merge into
  // one face whose boundary carries every shared vertex.
  auto side_embedding = [&](const std::vector<std::string>& vs, PlaneEmbedding& se,
                            std::string& face_id) {
    Graph side = induced_subgraph(spec.base, vs);
    std::string apex = "apex";
    while (side.has_vertex(apex)) apex += "_";
    std::vector<std::string> names = side.verts;
    names.push_back(apex);
    auto es = side.edge_names();
    for (const auto& v : shared_set) es.emplace_back(apex, v);
    auto pr = test_planarity(make_graph(names, es));
    const auto& full = std::get<PlaneEmbedding>(pr);
    for (const auto& [v, nb] : full.rotation) {
      if (v == apex) continue;
      std::vector<std::string> filtered;
      for (const auto& x : nb)
        if (x != apex) filtered.push_back(x);
      se.rotation[v] = std::move(filtered);
    }
    std::string best;
    for (const auto& f : faces(side, se)) {
      bool all = true;
      for (const auto& v : shared_set)
        if (!f.contains(v)) {
          all = false;
          break;
        }
      if (!all) continue;
      std::string id = f.id();
      if (best.empty() || id < best) best = std::move(id);
    }
    if (best.empty())
      throw error(errc::unknown_face, "apex removal left no face with the shared subgraph");
    face_id = best;
    se.outer_face = best;
  };
  side_embedding(spec.v1, w.emb1, w.face1);
  side_embedding(spec.v2, w.emb2, w.face2);
  w.kuratowski = extract_kuratowski(h);
  return w;
}

}  // namespace

std::vector<std::vector<Graph>> planar_partial_cube_stock(int max_vertices) {
  Stock stock(std::max(max_vertices, 0));
  for (int size = 1; size <= max_vertices; ++size) {
    for (size_t gi = 0; gi < stock.by_size[static_cast<size_t>(size)].size(); ++gi) {
      Graph g = stock.by_size[static_cast<size_t>(size)][gi];
      DistanceMatrix d = all_pairs_distances_serial(g);
      for (const auto& [v1, v2] : enum_side_pairs(g, d)) {
        if (static_cast<int>(v1.size() + v2.size()) > max_vertices) continue;
        Graph h = expand(make_spec(g, v1, v2));
        if (planar_verdict(h)) stock.offer(h);
      }
    }
  }
  return stock.by_size;
}

std::optional<FlawWitness> find_flaw_witness(const FlawBudget& budget, std::uint64_t seed) {
  (void)seed;  // enumeration is exhaustive and ordered; nothing to randomize
  int max = budget.max_base_vertices;
  if (max < 1) return std::nullopt;

  Stock stock(max);
  for (int size = 1; size <= max; ++size) {
    for (size_t gi = 0; gi < stock.by_size[static_cast<size_t>(size)].size(); ++gi) {
      Graph g = stock.by_size[static_cast<size_t>(size)][gi];
      DistanceMatrix d = all_pairs_distances_serial(g);
      auto pairs = enum_side_pairs(g, d);

      // Parallel speculation over candidates, sequential commit below.
      std::vector<char> hit(pairs.size(), 0);
      std::vector<Graph> expansions(pairs.size());
#pragma omp parallel for schedule(dynamic)
      for (size_t i = 0; i < pairs.size(); ++i) {
        ExpansionSpec spec = make_spec(g, pairs[i].first, pairs[i].second);
        Graph h = expand(spec);
        expansions[i] = h;
        // Shared sets of <= 3 vertices admit only three-point cyclic orders,
        // which can always be matched oppositely: such expansions of planar
        // sides stay planar, so only larger shared sets can separate the
        // conditions.
        std::vector<int> shared;
        std::set_intersection(pairs[i].first.begin(), pairs[i].first.end(),
                              pairs[i].second.begin(), pairs[i].second.end(),
                              std::back_inserter(shared));
        if (shared.size() >= 4 && !planar_verdict(h) && is_two_face_expansion(spec))
          hit[i] = 1;
      }
      for (size_t i = 0; i < pairs.size(); ++i) {
        if (hit[i]) {
          ExpansionSpec spec = make_spec(g, pairs[i].first, pairs[i].second);
          return package_witness(spec, expansions[i]);
        }
        const Graph& h = expansions[i];
        if (h.n() <= max && planar_verdict(h)) stock.offer(h);
      }
    }
  }
  return std::nullopt;
}

bool verify_flaw_witness(const FlawWitness& w) {
  if (!spec_is_valid(w.spec)) return false;
  std::vector<std::string> shared = w.spec.intersection();
  std::set<std::string> shared_set(shared.begin(), shared.end());

  auto side_ok = [&](const std::vector<std::string>& vs, const PlaneEmbedding& se,
                     const std::string& face_id) {
    try {
      Graph host = induced_subgraph(w.spec.base, vs);
      if (!verify_embedding(host, se)) return false;
      for (const auto& f : faces(host, se))
        if (f.id() == face_id) {
          for (const auto& v : shared_set)
            if (!f.contains(v)) return false;
          return true;
        }
      return false;
    } catch (const error&) {
      return false;
    }
  };
  if (!side_ok(w.spec.v1, w.emb1, w.face1)) return false;
  if (!side_ok(w.spec.v2, w.emb2, w.face2)) return false;

  Graph h = expand(w.spec);
  return verify_kuratowski(h, w.kuratowski);
}

}  // namespace pcube

#include "pcube/planarity.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace pcube {

std::string FaceWalk::id() const {
  if (vseq.empty()) return "";
  std::vector<std::string> best = vseq;
  for (size_t r = 1; r < vseq.size(); ++r) {
    std::vector<std::string> cand;
    cand.reserve(vseq.size());
    for (size_t i = 0; i < vseq.size(); ++i) cand.push_back(vseq[(r + i) % vseq.size()]);
    if (cand < best) best = cand;
  }
  std::string out = best[0];
  for (size_t i = 1; i < best.size(); ++i) out += " " + best[i];
  return out;
}

bool FaceWalk::contains(const std::string& v) const {
  return std::find(vseq.begin(), vseq.end(), v) != vseq.end();
}

namespace {

// ---------------------------------------------------------------------------
// Face traversal over an index-based rotation system.  rot[v] lists neighbor
// indices in cyclic order; only vertices listed in `alive` take part.
// Returns faces as cyclic index sequences.

std::vector<std::vector<int>> walk_faces(const std::vector<std::vector<int>>& rot,
                                         const std::vector<int>& alive) {
  std::map<std::pair<int, int>, int> succ_at;  // (v, incoming u) -> position of u in rot[v]
  std::set<std::pair<int, int>> pending;       // unused directed edges
  for (int v : alive)
    for (size_t k = 0; k < rot[static_cast<size_t>(v)].size(); ++k) {
      int u = rot[static_cast<size_t>(v)][k];
      succ_at[{v, u}] = static_cast<int>(k);
      pending.insert({v, u});  // directed edge v -> u
    }

  std::vector<std::vector<int>> out;
  for (int v : alive)
    if (rot[static_cast<size_t>(v)].empty()) out.push_back({v});

  while (!pending.empty()) {
    auto start = *pending.begin();
    std::vector<int> seq;
    auto cur = start;
    do {
      pending.erase(cur);
      seq.push_back(cur.first);
      auto [u, w] = cur;
      // Arrived at w along (u,w): leave along the successor of u in rot[w].
      const auto& rw = rot[static_cast<size_t>(w)];
      int pos = succ_at.at({w, u});
      int nxt = rw[static_cast<size_t>((pos + 1) % rw.size())];
      cur = {w, nxt};
    } while (cur != start);
    out.push_back(std::move(seq));
  }
  return out;
}

std::vector<int> canonical_rotation(const std::vector<int>& seq) {
  std::vector<int> best = seq;
  for (size_t r = 1; r < seq.size(); ++r) {
    std::vector<int> cand;
    cand.reserve(seq.size());
    for (size_t i = 0; i < seq.size(); ++i) cand.push_back(seq[(r + i) % seq.size()]);
    if (cand < best) best = cand;
  }
  return best;
}

// ---------------------------------------------------------------------------
// Demoucron-style planar embedding of one 2-connected block, index-based.
// Returns false when some bridge has no admissible face (block non-planar);
// otherwise fills rot with a valid rotation system of the block.

struct Bridge {
  std::vector<int> attachments;   // sorted, in the embedded subgraph
  std::vector<int> internals;     // sorted component vertices outside it
  std::pair<int, int> chord{-1, -1};
  std::vector<int> sort_key;
};

bool embed_biconnected(const Graph& b, std::vector<std::vector<int>>& rot) {
  int n = b.n();
  rot.assign(static_cast<size_t>(n), {});
  if (b.m() == 1) {
    auto [u, v] = b.edges[0];
    rot[static_cast<size_t>(u)] = {v};
    rot[static_cast<size_t>(v)] = {u};
    return true;
  }

  // Initial cycle by DFS from vertex 0, neighbors ascending; the first back
  // edge closes a deterministic cycle.
  std::vector<int> parent(static_cast<size_t>(n), -2);
  std::vector<int> cycle;
  {
    std::vector<std::pair<int, size_t>> stack{{0, 0}};
    parent[0] = -1;
    while (!stack.empty() && cycle.empty()) {
      auto& [u, k] = stack.back();
      if (k >= b.adj[static_cast<size_t>(u)].size()) {
        stack.pop_back();
        continue;
      }
      int w = b.adj[static_cast<size_t>(u)][k++];
      if (w == parent[static_cast<size_t>(u)]) continue;
      if (parent[static_cast<size_t>(w)] == -2) {
        parent[static_cast<size_t>(w)] = u;
        stack.emplace_back(w, 0);
      } else {
        // Back edge u -> w: cycle w .. u along tree parents.
        int x = u;
        while (x != w) {
          cycle.push_back(x);
          x = parent[static_cast<size_t>(x)];
        }
        cycle.push_back(w);
        std::reverse(cycle.begin(), cycle.end());
      }
    }
  }

  std::vector<char> in_h(static_cast<size_t>(n), 0);
  std::set<std::pair<int, int>> eh;
  auto add_edge = [&](int x, int y) { eh.insert(std::minmax(x, y)); };
  for (size_t i = 0; i < cycle.size(); ++i) {
    int u = cycle[i];
    int p = cycle[(i + cycle.size() - 1) % cycle.size()];
    int q = cycle[(i + 1) % cycle.size()];
    rot[static_cast<size_t>(u)] = {p, q};
    in_h[static_cast<size_t>(u)] = 1;
    add_edge(u, q);
  }

  while (static_cast<int>(eh.size()) < b.m()) {
    // Current faces.
    std::vector<int> alive;
    for (int v = 0; v < n; ++v)
      if (in_h[static_cast<size_t>(v)]) alive.push_back(v);
    auto fs = walk_faces(rot, alive);
    std::vector<std::vector<int>> face_ids;
    face_ids.reserve(fs.size());
    for (const auto& f : fs) face_ids.push_back(canonical_rotation(f));
    std::vector<std::set<int>> face_verts;
    face_verts.reserve(fs.size());
    for (const auto& f : fs) face_verts.emplace_back(f.begin(), f.end());

    // Bridges relative to the embedded subgraph.
    std::vector<Bridge> bridges;
    for (auto [x, y] : b.edges) {
      if (eh.count({x, y})) continue;
      if (in_h[static_cast<size_t>(x)] && in_h[static_cast<size_t>(y)]) {
        Bridge br;
        br.attachments = {x, y};
        br.chord = {x, y};
        br.sort_key = {x, y, -1};
        bridges.push_back(std::move(br));
      }
    }
    {
      std::vector<char> seen(static_cast<size_t>(n), 0);
      for (int s = 0; s < n; ++s) {
        if (in_h[static_cast<size_t>(s)] || seen[static_cast<size_t>(s)]) continue;
        std::vector<int> comp{s};
        seen[static_cast<size_t>(s)] = 1;
        std::set<int> attach;
        for (size_t k = 0; k < comp.size(); ++k)
          for (int w : b.adj[static_cast<size_t>(comp[k])]) {
            if (in_h[static_cast<size_t>(w)]) {
              attach.insert(w);
            } else if (!seen[static_cast<size_t>(w)]) {
              seen[static_cast<size_t>(w)] = 1;
              comp.push_back(w);
            }
          }
        Bridge br;
        br.attachments = {attach.begin(), attach.end()};
        std::sort(comp.begin(), comp.end());
        br.internals = comp;
        br.sort_key = br.attachments;
        br.sort_key.push_back(-2);
        br.sort_key.insert(br.sort_key.end(), comp.begin(), comp.end());
        bridges.push_back(std::move(br));
      }
    }
    std::sort(bridges.begin(), bridges.end(),
              [](const Bridge& a, const Bridge& b2) { return a.sort_key < b2.sort_key; });

    // Admissible faces per bridge.
    int pick = -1;
    std::vector<std::vector<int>> admissible(bridges.size());
    for (size_t i = 0; i < bridges.size(); ++i) {
      for (size_t f = 0; f < fs.size(); ++f) {
        bool ok = true;
        for (int a : bridges[i].attachments)
          if (!face_verts[f].count(a)) {
            ok = false;
            break;
          }
        if (ok) admissible[i].push_back(static_cast<int>(f));
      }
      if (admissible[i].empty()) return false;
      if (admissible[i].size() == 1 && pick == -1) pick = static_cast<int>(i);
    }
    if (pick == -1) pick = 0;

    // Least admissible face by canonical id.
    int face = admissible[static_cast<size_t>(pick)][0];
    for (int f : admissible[static_cast<size_t>(pick)])
      if (face_ids[static_cast<size_t>(f)] < face_ids[static_cast<size_t>(face)]) face = f;

    // A path through the bridge between two attachments.
    const Bridge& br = bridges[static_cast<size_t>(pick)];
    std::vector<int> path;
    if (br.chord.first != -1) {
      path = {br.chord.first, br.chord.second};
    } else {
      int a = br.attachments[0], bt = br.attachments[1];
      std::set<int> inside(br.internals.begin(), br.internals.end());
      std::map<int, int> par;
      std::vector<int> queue;
      for (int w : b.adj[static_cast<size_t>(a)])
        if (inside.count(w) && !par.count(w)) {
          par[w] = a;
          queue.push_back(w);
        }
      int hit = -1;
      for (size_t qi = 0; qi < queue.size() && hit == -1; ++qi) {
        int u = queue[qi];
        for (int w : b.adj[static_cast<size_t>(u)]) {
          if (w == bt) {
            hit = u;
            break;
          }
          if (inside.count(w) && !par.count(w)) {
            par[w] = u;
            queue.push_back(w);
          }
        }
      }
      path = {bt};
      int x = hit;
      while (x != a) {
        path.push_back(x);
        x = par.at(x);
      }
      path.push_back(a);
      std::reverse(path.begin(), path.end());
    }

    // Split the face with the path.
    const auto& fseq = fs[static_cast<size_t>(face)];
    auto pos_of = [&](int v) {
      for (size_t i = 0; i < fseq.size(); ++i)
        if (fseq[i] == v) return i;
      return fseq.size();
    };
    int a = path.front(), bt = path.back();
    size_t pa = pos_of(a), pb = pos_of(bt);
    int xa = fseq[(pa + fseq.size() - 1) % fseq.size()];
    int wb = fseq[(pb + fseq.size() - 1) % fseq.size()];
    auto insert_after = [&](int at, int anchor, int novel) {
      auto& r = rot[static_cast<size_t>(at)];
      auto it = std::find(r.begin(), r.end(), anchor);
      r.insert(it + 1, novel);
    };
    insert_after(a, xa, path[1]);
    insert_after(bt, wb, path[static_cast<size_t>(path.size() - 2)]);
    for (size_t i = 1; i + 1 < path.size(); ++i) {
      rot[static_cast<size_t>(path[i])] = {path[i - 1], path[i + 1]};
      in_h[static_cast<size_t>(path[i])] = 1;
    }
    for (size_t i = 0; i + 1 < path.size(); ++i) add_edge(path[i], path[i + 1]);
  }
  return true;
}

// ---------------------------------------------------------------------------
// Biconnected blocks (edge partition) by lowpoint DFS.

void block_dfs(const Graph& g, int u, int from, int& timer, std::vector<int>& tin,
               std::vector<int>& low, std::vector<std::pair<int, int>>& estack,
               std::vector<std::vector<std::pair<int, int>>>& blocks) {
  tin[static_cast<size_t>(u)] = low[static_cast<size_t>(u)] = timer++;
  for (int w : g.adj[static_cast<size_t>(u)]) {
    if (w == from) continue;
    if (tin[static_cast<size_t>(w)] == -1) {
      estack.emplace_back(u, w);
      block_dfs(g, w, u, timer, tin, low, estack, blocks);
      low[static_cast<size_t>(u)] = std::min(low[static_cast<size_t>(u)], low[static_cast<size_t>(w)]);
      if (low[static_cast<size_t>(w)] >= tin[static_cast<size_t>(u)]) {
        std::vector<std::pair<int, int>> blk;
        while (true) {
          auto e = estack.back();
          estack.pop_back();
          blk.push_back(e);
          if (e == std::make_pair(u, w)) break;
        }
        blocks.push_back(std::move(blk));
      }
    } else if (tin[static_cast<size_t>(w)] < tin[static_cast<size_t>(u)]) {
      estack.emplace_back(u, w);
      low[static_cast<size_t>(u)] = std::min(low[static_cast<size_t>(u)], tin[static_cast<size_t>(w)]);
    }
  }
}

// Embed one connected graph; returns rotation keyed by g's vertex indices,
// or false when some block is non-planar.
bool embed_connected(const Graph& g, std::vector<std::vector<int>>& rot) {
  rot.assign(static_cast<size_t>(g.n()), {});
  if (g.m() == 0) return true;

  std::vector<int> tin(static_cast<size_t>(g.n()), -1), low(static_cast<size_t>(g.n()), 0);
  std::vector<std::pair<int, int>> estack;
  std::vector<std::vector<std::pair<int, int>>> blocks;
  int timer = 0;
  block_dfs(g, 0, -1, timer, tin, low, estack, blocks);

  // Deterministic block order: by least normalized edge.
  for (auto& blk : blocks) {
    for (auto& e : blk)
      if (e.first > e.second) std::swap(e.first, e.second);
    std::sort(blk.begin(), blk.end());
  }
  std::sort(blocks.begin(), blocks.end());

  for (const auto& blk : blocks) {
    std::set<int> vs;
    for (auto [x, y] : blk) {
      vs.insert(x);
      vs.insert(y);
    }
    std::vector<std::string> names;
    for (int v : vs) names.push_back(g.name(v));
    std::vector<std::pair<std::string, std::string>> es;
    for (auto [x, y] : blk) es.emplace_back(g.name(x), g.name(y));
    Graph bg = make_graph(names, es);

    std::vector<std::vector<int>> brot;
    if (!embed_biconnected(bg, brot)) return false;

    // Concatenate block rotations at shared (cut) vertices; blocks meet a
    // vertex in disjoint incidence sets, so gluing merges one face per join.
    for (int lv = 0; lv < bg.n(); ++lv) {
      int gv = g.index_of(bg.name(lv));
      for (int lw : brot[static_cast<size_t>(lv)])
        rot[static_cast<size_t>(gv)].push_back(g.index_of(bg.name(lw)));
    }
  }
  return true;
}

bool embed_graph(const Graph& g, std::vector<std::vector<int>>& rot) {
  rot.assign(static_cast<size_t>(g.n()), {});
  for (const auto& comp : components_by_index(g)) {
    Graph cg = induced_subgraph_by_index(g, comp);
    std::vector<std::vector<int>> crot;
    if (!embed_connected(cg, crot)) return false;
    for (int lv = 0; lv < cg.n(); ++lv) {
      int gv = g.index_of(cg.name(lv));
      for (int lw : crot[static_cast<size_t>(lv)])
        rot[static_cast<size_t>(gv)].push_back(g.index_of(cg.name(lw)));
    }
  }
  return true;
}

std::vector<FaceWalk> faces_of_rotation(const Graph& g,
                                        const std::vector<std::vector<int>>& rot) {
  std::vector<int> alive(static_cast<size_t>(g.n()));
  for (int v = 0; v < g.n(); ++v) alive[static_cast<size_t>(v)] = v;
  auto raw = walk_faces(rot, alive);
  std::vector<FaceWalk> out;
  out.reserve(raw.size());
  for (const auto& f : raw) {
    FaceWalk fw;
    for (int v : f) fw.vseq.push_back(g.name(v));
    out.push_back(std::move(fw));
  }
  std::sort(out.begin(), out.end(),
            [](const FaceWalk& a, const FaceWalk& b) { return a.id() < b.id(); });
  return out;
}

}  // namespace

Graph embedding_host(const PlaneEmbedding& emb) {
  std::vector<std::string> names;
  std::vector<std::pair<std::string, std::string>> es;
  for (const auto& [v, nb] : emb.rotation) {
    names.push_back(v);
    for (const auto& w : nb)
      if (v < w) es.emplace_back(v, w);
  }
  return make_graph(names, es);
}

std::vector<FaceWalk> faces(const Graph& g, const PlaneEmbedding& emb) {
  // The rotation must list exactly the incidences of g.
  if (static_cast<int>(emb.rotation.size()) != g.n())
    throw error(errc::invalid_rotation, "rotation covers the wrong vertex set");
  std::vector<std::vector<int>> rot(static_cast<size_t>(g.n()));
  for (const auto& [v, nb] : emb.rotation) {
    auto iv = g.find(v);
    if (!iv) throw error(errc::invalid_rotation, "rotation names unknown vertex '" + v + "'");
    std::vector<int> r;
    r.reserve(nb.size());
    for (const auto& w : nb) {
      auto iw = g.find(w);
      if (!iw) throw error(errc::invalid_rotation, "rotation names unknown vertex '" + w + "'");
      r.push_back(*iw);
    }
    std::vector<int> sorted = r;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != g.adj[static_cast<size_t>(*iv)])
      throw error(errc::invalid_rotation,
                  "rotation at '" + v + "' is not a permutation of its neighbors");
    rot[static_cast<size_t>(*iv)] = std::move(r);
  }

  auto out = faces_of_rotation(g, rot);

  // Euler per component.
  std::map<std::string, int> comp_of;
  auto comps = components(g);
  for (size_t c = 0; c < comps.size(); ++c)
    for (const auto& v : comps[c]) comp_of[v] = static_cast<int>(c);
  std::vector<int> fcount(comps.size(), 0), vcount(comps.size(), 0), ecount(comps.size(), 0);
  for (const auto& f : out) ++fcount[static_cast<size_t>(comp_of.at(f.vseq[0]))];
  for (const auto& comp : comps) vcount[static_cast<size_t>(comp_of.at(comp[0]))] =
      static_cast<int>(comp.size());
  for (auto [a, b] : g.edges) ++ecount[static_cast<size_t>(comp_of.at(g.name(a)))];
  for (size_t c = 0; c < comps.size(); ++c)
    if (vcount[c] - ecount[c] + fcount[c] != 2)
      throw error(errc::not_genus_zero, "Euler count fails on a component");
  return out;
}

bool verify_embedding(const Graph& g, const PlaneEmbedding& emb) {
  try {
    auto fs = faces(g, emb);
    if (emb.outer_face.empty()) return true;
    for (const auto& f : fs)
      if (f.id() == emb.outer_face) return true;
    return false;
  } catch (const error&) {
    return false;
  }
}

PlaneEmbedding reroot_outer_face(const PlaneEmbedding& emb, const std::string& face_id) {
  Graph g = embedding_host(emb);
  for (const auto& f : faces(g, emb))
    if (f.id() == face_id) {
      PlaneEmbedding out = emb;
      out.outer_face = face_id;
      return out;
    }
  throw error(errc::unknown_face, "'" + face_id + "' is not a face of the embedding");
}

bool planar_verdict(const Graph& g) {
  int n = g.n(), m = g.m();
  if (n >= 3 && m > 3 * n - 6) return false;
  std::vector<std::vector<int>> rot;
  return embed_graph(g, rot);
}

namespace {

KuratowskiWitness classify_subdivision(const Graph& g, const std::set<std::pair<int, int>>& keep) {
  // Degrees within the kept edge set.
  std::map<int, std::vector<int>> adj;
  for (auto [a, b] : keep) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<int> branch;
  for (auto& [v, nb] : adj) {
    std::sort(nb.begin(), nb.end());
    if (nb.size() >= 3) branch.push_back(v);
  }
  std::sort(branch.begin(), branch.end());

  // Each branch-incident edge starts one subdivision path; follow through
  // degree-2 vertices.
  std::set<int> bset(branch.begin(), branch.end());
  std::vector<std::vector<int>> paths;
  for (int s : branch)
    for (int first : adj.at(s)) {
      std::vector<int> p{s, first};
      int prev = s, cur = first;
      while (!bset.count(cur)) {
        const auto& nb = adj.at(cur);
        int nxt = nb[0] == prev ? nb[1] : nb[0];
        p.push_back(nxt);
        prev = cur;
        cur = nxt;
      }
      if (p.front() < p.back()) paths.push_back(std::move(p));
    }
  std::sort(paths.begin(), paths.end());

  KuratowskiWitness w;
  auto path_between = [&](int a, int b) -> std::vector<int> {
    for (const auto& p : paths)
      if ((p.front() == a && p.back() == b) || (p.front() == b && p.back() == a)) {
        auto q = p;
        if (q.front() != a) std::reverse(q.begin(), q.end());
        return q;
      }
    return {};
  };

  if (branch.size() == 5 && paths.size() == 10) {
    w.kind = KuratowskiWitness::kind_t::k5;
    for (int v : branch) w.branch_vertices.push_back(g.name(v));
    for (size_t i = 0; i < 5; ++i)
      for (size_t j = i + 1; j < 5; ++j) {
        auto p = path_between(branch[i], branch[j]);
        if (p.empty())
          throw error(errc::not_planar, "reduction did not end at a clean subdivision");
        std::vector<std::string> names;
        for (int v : p) names.push_back(g.name(v));
        w.paths.push_back(std::move(names));
      }
    return w;
  }
  if (branch.size() == 6 && paths.size() == 9) {
    w.kind = KuratowskiWitness::kind_t::k33;
    // Part A: the first branch plus the two it has no path to.
    std::vector<int> pa{branch[0]}, pb;
    for (size_t i = 1; i < 6; ++i) {
      if (path_between(branch[0], branch[i]).empty())
        pa.push_back(branch[i]);
      else
        pb.push_back(branch[i]);
    }
    if (pa.size() != 3 || pb.size() != 3)
      throw error(errc::not_planar, "reduction did not end at a clean subdivision");
    for (int v : pa) w.branch_vertices.push_back(g.name(v));
    for (int v : pb) w.branch_vertices.push_back(g.name(v));
    for (int a : pa)
      for (int b : pb) {
        auto p = path_between(a, b);
        if (p.empty())
          throw error(errc::not_planar, "reduction did not end at a clean subdivision");
        std::vector<std::string> names;
        for (int v : p) names.push_back(g.name(v));
        w.paths.push_back(std::move(names));
      }
    return w;
  }
  throw error(errc::not_planar, "reduction did not end at a clean subdivision");
}

}  // namespace

KuratowskiWitness extract_kuratowski(const Graph& g) {
  if (planar_verdict(g)) throw error(errc::not_planar_input, "graph is planar");

  // One deletion pass leaves an edge-minimal non-planar graph: once an edge
  // survives, every later graph is a subgraph of the one it was tested on,
  // so its removal keeps planarity there too.
  std::set<std::pair<int, int>> keep(g.edges.begin(), g.edges.end());
  for (auto e : g.edges) {
    keep.erase(e);
    std::vector<std::pair<std::string, std::string>> es;
    es.reserve(keep.size());
    for (auto [a, b] : keep) es.emplace_back(g.name(a), g.name(b));
    Graph cand = make_graph(g.verts, es);
    if (planar_verdict(cand)) keep.insert(e);
  }
  return classify_subdivision(g, keep);
}

PlanarityResult test_planarity(const Graph& g) {
  std::vector<std::vector<int>> rot;
  if (embed_graph(g, rot)) {
    PlaneEmbedding emb;
    for (int v = 0; v < g.n(); ++v) {
      std::vector<std::string> nb;
      nb.reserve(rot[static_cast<size_t>(v)].size());
      for (int w : rot[static_cast<size_t>(v)]) nb.push_back(g.name(w));
      emb.rotation[g.name(v)] = std::move(nb);
    }
    auto fs = faces(g, emb);  // validates; throws on internal error
    emb.outer_face = fs.front().id();
    return emb;
  }
  KuratowskiWitness w = extract_kuratowski(g);
  if (!verify_kuratowski(g, w))
    throw error(errc::not_planar, "internal witness failed verification");
  return w;
}

bool verify_kuratowski(const Graph& g, const KuratowskiWitness& w) {
  size_t nb = w.kind == KuratowskiWitness::kind_t::k5 ? 5 : 6;
  size_t np = w.kind == KuratowskiWitness::kind_t::k5 ? 10 : 9;
  if (w.branch_vertices.size() != nb || w.paths.size() != np) return false;
  for (const auto& v : w.branch_vertices)
    if (!g.has_vertex(v)) return false;
  std::set<std::string> bset(w.branch_vertices.begin(), w.branch_vertices.end());
  if (bset.size() != nb) return false;

  std::vector<std::pair<std::string, std::string>> want;
  if (w.kind == KuratowskiWitness::kind_t::k5) {
    for (size_t i = 0; i < 5; ++i)
      for (size_t j = i + 1; j < 5; ++j)
        want.emplace_back(w.branch_vertices[i], w.branch_vertices[j]);
  } else {
    for (size_t i = 0; i < 3; ++i)
      for (size_t j = 0; j < 3; ++j)
        want.emplace_back(w.branch_vertices[i], w.branch_vertices[3 + j]);
  }

  std::set<std::string> used_internal;
  for (size_t k = 0; k < np; ++k) {
    const auto& p = w.paths[k];
    if (p.size() < 2) return false;
    auto [s, t] = want[k];
    if (!((p.front() == s && p.back() == t) || (p.front() == t && p.back() == s)))
      return false;
    for (size_t i = 0; i + 1 < p.size(); ++i)
      if (!g.has_vertex(p[i]) || !g.has_vertex(p[i + 1]) || !g.has_edge(p[i], p[i + 1]))
        return false;
    for (size_t i = 1; i + 1 < p.size(); ++i) {
      if (bset.count(p[i])) return false;
      if (!used_internal.insert(p[i]).second) return false;  // shared internal
    }
  }
  return true;
}

bool common_face_realizable(const Graph& g, const std::vector<std::string>& s) {
  for (const auto& v : s) g.index_of(v);
  if (!planar_verdict(g)) throw error(errc::not_planar_input, "graph is not planar");
  std::string apex = "apex";
  while (g.has_vertex(apex)) apex += "_";
  std::vector<std::string> names = g.verts;
  names.push_back(apex);
  auto es = g.edge_names();
  std::set<std::string> ss(s.begin(), s.end());
  for (const auto& v : ss) es.emplace_back(apex, v);
  return planar_verdict(make_graph(names, es));
}

}  // namespace pcube

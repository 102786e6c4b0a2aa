#include "pcube/ops.hpp"

#include <algorithm>
#include <set>

namespace pcube {

std::vector<std::string> ExpansionSpec::intersection() const {
  std::vector<std::string> out;
  std::set_intersection(v1.begin(), v1.end(), v2.begin(), v2.end(),
                        std::back_inserter(out));
  return out;
}

namespace {

std::vector<std::string> sorted_unique(std::vector<std::string> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

void validate_spec(const ExpansionSpec& spec) {
  const Graph& g = spec.base;
  std::vector<std::string> v1 = sorted_unique(spec.v1);
  std::vector<std::string> v2 = sorted_unique(spec.v2);
  for (const auto& v : v1) g.index_of(v);
  for (const auto& v : v2) g.index_of(v);

  std::set<std::string> in1(v1.begin(), v1.end()), in2(v2.begin(), v2.end());
  for (const auto& v : g.verts)
    if (!in1.count(v) && !in2.count(v))
      throw error(errc::not_covering, "vertex '" + v + "' is in neither side");
  for (auto [a, b] : g.edges) {
    const std::string& na = g.name(a);
    const std::string& nb = g.name(b);
    bool side1 = in1.count(na) && in1.count(nb);
    bool side2 = in2.count(na) && in2.count(nb);
    if (!side1 && !side2)
      throw error(errc::not_covering, "edge " + na + "-" + nb + " lies in neither side");
  }

  DistanceMatrix d = all_pairs_distances(g);
  auto check_side = [&](const std::vector<std::string>& vs, int side) {
    std::vector<int> idx;
    idx.reserve(vs.size());
    for (const auto& v : vs) idx.push_back(g.index_of(v));
    Graph sub = induced_subgraph_by_index(g, idx);
    DistanceMatrix ds = all_pairs_distances_serial(sub);
    for (int i = 0; i < sub.n(); ++i)
      for (int j = i + 1; j < sub.n(); ++j) {
        int gi = g.index_of(sub.name(i)), gj = g.index_of(sub.name(j));
        if (ds.at(i, j) != d.at(gi, gj))
          throw error(errc::not_isometric,
                      "side " + std::to_string(side) + " distorts distance between '" +
                          sub.name(i) + "' and '" + sub.name(j) + "'");
      }
  };
  check_side(v1, 1);
  check_side(v2, 2);

  std::vector<std::string> inter;
  std::set_intersection(v1.begin(), v1.end(), v2.begin(), v2.end(),
                        std::back_inserter(inter));
  if (inter.empty())
    throw error(errc::empty_intersection, "the two sides share no vertex");
}

bool spec_is_valid(const ExpansionSpec& spec) {
  try {
    validate_spec(spec);
    return true;
  } catch (const error&) {
    return false;
  }
}

Lift default_lift(const ExpansionSpec& spec) {
  Lift lift;
  for (const auto& v : spec.v1) lift.side1[v] = copy_id(v, 1);
  for (const auto& v : spec.v2) lift.side2[v] = copy_id(v, 2);
  return lift;
}

Graph expand_with_lift(const ExpansionSpec& spec, const Lift& lift) {
  validate_spec(spec);
  const Graph& g = spec.base;
  std::vector<std::string> v1 = sorted_unique(spec.v1);
  std::vector<std::string> v2 = sorted_unique(spec.v2);

  auto named = [&](const std::map<std::string, std::string>& side,
                   const std::string& v, int s) -> const std::string& {
    auto it = side.find(v);
    if (it == side.end())
      throw error(errc::invalid_step,
                  "expansion naming misses vertex '" + v + "' on side " + std::to_string(s));
    return it->second;
  };

  std::vector<std::string> names;
  for (const auto& v : v1) names.push_back(named(lift.side1, v, 1));
  for (const auto& v : v2) names.push_back(named(lift.side2, v, 2));

  std::set<std::string> s1(v1.begin(), v1.end()), s2(v2.begin(), v2.end());
  std::vector<std::pair<std::string, std::string>> es;
  for (auto [a, b] : g.edges) {
    const std::string& na = g.name(a);
    const std::string& nb = g.name(b);
    if (s1.count(na) && s1.count(nb))
      es.emplace_back(named(lift.side1, na, 1), named(lift.side1, nb, 1));
    if (s2.count(na) && s2.count(nb))
      es.emplace_back(named(lift.side2, na, 2), named(lift.side2, nb, 2));
  }
  for (const auto& v : v1)
    if (s2.count(v)) es.emplace_back(named(lift.side1, v, 1), named(lift.side2, v, 2));

  return make_graph(names, es);  // duplicate names surface as duplicate_vertex
}

Graph expand(const ExpansionSpec& spec) {
  return expand_with_lift(spec, default_lift(spec));
}

std::vector<std::pair<std::string, std::string>> matching_edges(const ExpansionSpec& spec,
                                                                const Lift& lift) {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& v : spec.intersection())
    out.emplace_back(lift.side1.at(v), lift.side2.at(v));
  return out;
}

std::vector<std::string> ContractionResult::v1() const {
  std::set<std::string> s;
  for (const auto& [v, side] : side_of)
    if (side == 1) s.insert(image_of.at(v));
  return {s.begin(), s.end()};
}

std::vector<std::string> ContractionResult::v2() const {
  std::set<std::string> s;
  for (const auto& [v, side] : side_of)
    if (side == 2) s.insert(image_of.at(v));
  return {s.begin(), s.end()};
}

Lift ContractionResult::lift() const {
  Lift l;
  for (const auto& [v, side] : side_of) {
    if (side == 1)
      l.side1[image_of.at(v)] = v;
    else
      l.side2[image_of.at(v)] = v;
  }
  return l;
}

ContractionResult contract_class(const Graph& h, const ThetaPartition& tp, int class_id) {
  if (class_id < 0 || class_id >= tp.count())
    throw error(errc::unknown_class, "class index " + std::to_string(class_id) +
                                         " out of range (have " + std::to_string(tp.count()) + ")");
  if (!is_partial_cube(h))
    throw error(errc::not_partial_cube, "contraction is defined on partial cubes only");
  const auto& side = tp.side_of[static_cast<size_t>(class_id)];
  if (side.empty())
    throw error(errc::not_partial_cube, "class cut does not split the graph in two");

  ContractionResult r;
  r.class_id = class_id;

  // Partner across the cut (each vertex meets at most one class edge).
  std::vector<int> partner(static_cast<size_t>(h.n()), -1);
  for (auto [a, b] : tp.classes[static_cast<size_t>(class_id)]) {
    partner[static_cast<size_t>(a)] = b;
    partner[static_cast<size_t>(b)] = a;
  }

  std::vector<std::string> image(static_cast<size_t>(h.n()));
  for (int v = 0; v < h.n(); ++v) {
    int p = partner[static_cast<size_t>(v)];
    if (p == -1) {
      image[static_cast<size_t>(v)] = h.name(v);
    } else {
      int s1 = side[static_cast<size_t>(v)] == 1 ? v : p;
      image[static_cast<size_t>(v)] = merged_id(h.name(s1), class_id);
    }
  }

  std::set<std::string> qverts;
  for (int v = 0; v < h.n(); ++v) {
    qverts.insert(image[static_cast<size_t>(v)]);
    r.side_of[h.name(v)] = side[static_cast<size_t>(v)];
    r.image_of[h.name(v)] = image[static_cast<size_t>(v)];
  }
  std::vector<std::pair<std::string, std::string>> qedges;
  for (auto [a, b] : h.edges) {
    if (image[static_cast<size_t>(a)] == image[static_cast<size_t>(b)]) continue;
    qedges.emplace_back(image[static_cast<size_t>(a)], image[static_cast<size_t>(b)]);
  }
  r.quotient = make_graph({qverts.begin(), qverts.end()}, qedges);

  for (auto [a, b] : tp.classes[static_cast<size_t>(class_id)]) {
    int s1 = side[static_cast<size_t>(a)] == 1 ? a : b;
    int s2 = s1 == a ? b : a;
    r.matching.emplace_back(h.name(s1), h.name(s2));
  }
  std::sort(r.matching.begin(), r.matching.end());
  return r;
}

Graph restrict_side(const Graph& h, const ThetaPartition& tp, int class_id, int side) {
  if (class_id < 0 || class_id >= tp.count())
    throw error(errc::unknown_class, "class index " + std::to_string(class_id) +
                                         " out of range (have " + std::to_string(tp.count()) + ")");
  if (!is_partial_cube(h))
    throw error(errc::not_partial_cube, "restriction is defined on partial cubes only");
  const auto& side_map = tp.side_of[static_cast<size_t>(class_id)];
  if (side_map.empty())
    throw error(errc::not_partial_cube, "class cut does not split the graph in two");
  std::vector<int> keep;
  for (int v = 0; v < h.n(); ++v)
    if (side_map[static_cast<size_t>(v)] == side) keep.push_back(v);
  return induced_subgraph_by_index(h, keep);
}

std::vector<Graph> one_step_minors(const Graph& h) {
  if (!is_partial_cube(h))
    throw error(errc::not_partial_cube, "minors are defined on partial cubes only");
  ThetaPartition tp = theta_classes(h);
  std::vector<Graph> out;
  for (int c = 0; c < tp.count(); ++c) {
    out.push_back(contract_class(h, tp, c).quotient);
    out.push_back(restrict_side(h, tp, c, 1));
    out.push_back(restrict_side(h, tp, c, 2));
  }
  return out;
}

}  // namespace pcube

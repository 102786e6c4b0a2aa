#include "pcube/decompose.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "pcube/ops.hpp"
#include "pcube/planarity.hpp"
#include "pcube/rng.hpp"

namespace pcube {

namespace {

CertifyResult certify_impl(const Graph& h, SplitMix64* rng) {
  auto rec = recognize_partial_cube(h);
  if (std::holds_alternative<PcRefutation>(rec))
    return Refutation{std::get<PcRefutation>(rec)};
  auto pl = test_planarity(h);
  if (std::holds_alternative<KuratowskiWitness>(pl))
    return Refutation{std::get<KuratowskiWitness>(pl)};

  DecompositionCertificate cert;
  cert.final_labeling = std::get<HypercubeLabeling>(rec);
  Graph cur = h;
  while (cur.n() > 1) {
    ThetaPartition tp = theta_classes(cur);
    int pick = rng ? static_cast<int>(rng->below(static_cast<std::uint64_t>(tp.count()))) : 0;
    NonCrossingCertificate step = extract_noncrossing_step(cur, tp, pick);
    cur = step.spec.base;
    cert.steps.push_back(std::move(step));
  }
  std::reverse(cert.steps.begin(), cert.steps.end());
  return cert;
}

[[noreturn]] void step_fail(size_t i, const std::string& why) {
  throw error(errc::invalid_step, "step " + std::to_string(i) + ": " + why);
}

// Lift keys must be exactly the side sets and all target names distinct;
// expand_with_lift then cannot collide.
bool lift_ok(const NonCrossingCertificate& s) {
  std::set<std::string> v1(s.spec.v1.begin(), s.spec.v1.end());
  std::set<std::string> v2(s.spec.v2.begin(), s.spec.v2.end());
  if (s.lift.side1.size() != v1.size() || s.lift.side2.size() != v2.size()) return false;
  std::set<std::string> targets;
  for (const auto& [k, t] : s.lift.side1) {
    if (!v1.count(k)) return false;
    if (!targets.insert(t).second) return false;
  }
  for (const auto& [k, t] : s.lift.side2) {
    if (!v2.count(k)) return false;
    if (!targets.insert(t).second) return false;
  }
  return true;
}

}  // namespace

CertifyResult certify_planar_partial_cube(const Graph& h) { return certify_impl(h, nullptr); }

CertifyResult certify_planar_partial_cube_shuffled(const Graph& h, std::uint64_t seed) {
  SplitMix64 rng(seed);
  return certify_impl(h, &rng);
}

Graph replay(const DecompositionCertificate& cert) {
  if (cert.steps.empty()) {
    if (cert.final_labeling.vertex_order.size() != 1)
      throw error(errc::invalid_step, "empty step list requires a single-vertex labeling");
    Graph g = make_graph(cert.final_labeling.vertex_order, {});
    if (!verify_labeling(g, cert.final_labeling))
      throw error(errc::invalid_step, "final labeling does not fit a single vertex");
    return g;
  }

  if (cert.steps.front().spec.base.n() != 1)
    step_fail(0, "base of the first step is not a single vertex");
  Graph cur = cert.steps.front().spec.base;
  for (size_t i = 0; i < cert.steps.size(); ++i) {
    const auto& s = cert.steps[i];
    if (!(cur == s.spec.base)) step_fail(i, "base does not match the previous expansion");
    if (!verify_noncrossing(s)) step_fail(i, "expansion certificate failed verification");
    if (!lift_ok(s)) step_fail(i, "lift is not a collision-free naming of the sides");
    cur = expand_with_lift(s.spec, s.lift);
  }
  if (!verify_labeling(cur, cert.final_labeling))
    throw error(errc::invalid_step, "final labeling does not match the replayed graph");
  return cur;
}

bool is_minimal_obstruction(const Graph& h) {
  if (!is_partial_cube(h))
    throw error(errc::not_partial_cube, "minimal-obstruction check needs a partial cube");
  if (planar_verdict(h)) return false;
  for (const auto& minor : one_step_minors(h))
    if (!planar_verdict(minor)) return false;
  return true;
}

}  // namespace pcube

#include "hyperoct/cover.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "hyperoct/error.hpp"
#include "hyperoct/literal.hpp"

namespace hyperoct {
namespace {

std::string cycle_text(const std::vector<std::size_t>& cycle) {
  std::string out = "(";
  for (std::size_t k = 0; k < cycle.size(); ++k) {
    if (k > 0) out += ' ';
    out += std::to_string(cycle[k] + 1);
  }
  return out + ")";
}

}  // namespace

TorusMonodromy::TorusMonodromy(SignedPerm meridian, SignedPerm longitude)
    : meridian_(std::move(meridian)), longitude_(std::move(longitude)) {
  if (meridian_.degree() != longitude_.degree())
    throw DegreeError("meridian and longitude differ in degree");
  if (!meridian_.signs().is_zero())
    throw HypothesisViolation("meridian " + to_literal(meridian_) + " is not in S_n");
  if (!is_commuting(meridian_, longitude_))
    throw NotCommutingError("meridian " + to_literal(meridian_) + " and longitude " +
                            to_literal(longitude_) + " do not commute");
}

MeridianNormalization normalize_meridian(const SignedPerm& meridian,
                                         const SignedPerm& longitude) {
  if (meridian.degree() != longitude.degree())
    throw DegreeError("meridian and longitude differ in degree");
  if (!is_commuting(meridian, longitude))
    throw NotCommutingError("meridian " + to_literal(meridian) + " and longitude " +
                            to_literal(longitude) + " do not commute");

  const SignVector w = meridian.signs();
  SignVector u;
  for (const auto& cycle : cycle_decomposition(meridian.perm()).cycles) {
    bool sum = false;
    for (std::size_t i : cycle) sum ^= w.test(i);
    if (sum)
      throw HypothesisViolation("meridian cycle " + cycle_text(cycle) +
                                " has odd sign sum, so the double cover is branched over "
                                "this component (hypothesis violated)");
    bool value = false;
    for (std::size_t p = 1; p < cycle.size(); ++p) {
      value ^= w.test(cycle[p]);
      if (value) u.flip(cycle[p]);
    }
  }

  SignedPerm g = SignedPerm::from_signs(meridian.degree(), u);
  TorusMonodromy torus(conjugate(g, meridian), conjugate(g, longitude));
  return {std::move(g), std::move(torus)};
}

Z2 alpha_entry(const TorusMonodromy& tm, const ComponentData& c, std::size_t k) {
  if (!std::binary_search(c.indices.begin(), c.indices.end(), k))
    throw std::out_of_range("point " + std::to_string(k + 1) + " is not in the component");
  const SignedPerm lt = power(tm.longitude(), c.t);
  const SignVector w = permute(lt.perm().inverse(), lt.signs());
  return Z2(w.test(k));
}

Z2 alpha_pairing(const TorusMonodromy& tm, const ComponentData& c) {
  if (c.indices.empty()) throw std::logic_error("empty component");
  const Z2 first = alpha_entry(tm, c, c.indices.front());
  for (std::size_t k : c.indices)
    if (alpha_entry(tm, c, k) != first)
      throw std::logic_error("alpha entry depends on the chosen point");
  return first;
}

std::vector<ComponentData> components(const TorusMonodromy& tm) {
  const Permutation& m = tm.meridian().perm();
  const CentralizerDecomposition dec = decompose(m, tm.longitude());
  const OrbitFactorization of = orbit_factorization(m, dec);
  const CycleDecomposition cd = cycle_decomposition(m);

  std::vector<ComponentData> out;
  out.reserve(of.orbits.size());
  for (std::size_t y = 0; y < of.orbits.size(); ++y) {
    ComponentData c;
    c.orbit_cycles = of.orbits[y];
    c.indices = of.index_sets[y];
    c.e = cd.cycles[c.orbit_cycles.front()].size();
    c.t = c.orbit_cycles.size();
    for (std::size_t r : c.orbit_cycles) {
      if (cd.cycles[r].size() != c.e) throw std::logic_error("orbit mixes cycle lengths");
      if (dec.lambdas[r]) ++c.d;
    }
    c.alpha = alpha_pairing(tm, c);
    out.push_back(std::move(c));
  }
  return out;
}

Z2 torus_integral(const TorusMonodromy& tm) { return phi(tm.meridian(), tm.longitude()); }

TorusIdentityReport verify_torus_identity(const TorusMonodromy& tm) {
  TorusIdentityReport report;
  report.lhs = torus_integral(tm);
  report.components = components(tm);
  for (const ComponentData& c : report.components) report.rhs += Z2(c.e - 1) * c.alpha;
  return report;
}

BranchDivisorReport branch_divisor_pairing(const std::vector<TorusMonodromy>& tori) {
  BranchDivisorReport out;
  for (const TorusMonodromy& tm : tori) {
    TorusIdentityReport r = verify_torus_identity(tm);
    out.integral_sum += r.lhs;
    out.divisor_pairing += r.rhs;
    out.tori.push_back(std::move(r));
  }
  return out;
}

}  // namespace hyperoct

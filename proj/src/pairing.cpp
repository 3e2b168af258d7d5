#include "hyperoct/pairing.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "hyperoct/error.hpp"
#include "hyperoct/extension.hpp"
#include "hyperoct/literal.hpp"

namespace hyperoct {
namespace {

void require_commuting(const SignedPerm& sigma, const SignedPerm& tau) {
  if (sigma.degree() != tau.degree())
    throw DegreeError("degree mismatch: " + std::to_string(sigma.degree()) + " vs " +
                      std::to_string(tau.degree()));
  if (!is_commuting(sigma, tau))
    throw NotCommutingError(to_literal(sigma) + " and " + to_literal(tau) + " do not commute");
}

SignVector indicator(const std::vector<std::size_t>& points) {
  SignVector v;
  for (std::size_t i : points) v.flip(i);
  return v;
}

}  // namespace

Z2 phi(const SignedPerm& sigma, const SignedPerm& tau) {
  require_commuting(sigma, tau);
  const ExtElement c = commutator(lift(sigma), lift(tau));
  if (!c.vec().is_zero() || !c.perm().is_identity())
    throw std::logic_error("commutator of commuting lifts left the center");
  return c.central();
}

CentralizerDecomposition decompose(const Permutation& sigma, const SignedPerm& tau) {
  require_commuting(SignedPerm::from_perm(sigma), tau);
  // τ = (τ'·v, τ'), so v = τ'⁻¹·(signs of τ).
  const Permutation& tau_prime = tau.perm();
  const SignVector v = permute(tau_prime.inverse(), tau.signs());

  const CycleDecomposition cd = cycle_decomposition(sigma);
  CentralizerDecomposition dec{tau_prime, {}};
  dec.lambdas.reserve(cd.size());
  for (const auto& cycle : cd.cycles) {
    const bool lambda = v.test(cycle.front());
    for (std::size_t i : cycle)
      if (v.test(i) != lambda) throw std::logic_error("vector part not constant on a cycle");
    dec.lambdas.emplace_back(lambda);
  }
  return dec;
}

SignedPerm reassemble(const Permutation& sigma, const CentralizerDecomposition& dec) {
  const CycleDecomposition cd = cycle_decomposition(sigma);
  if (dec.lambdas.size() != cd.size())
    throw std::invalid_argument("lambda count does not match the cycles of sigma");
  SignVector v;
  for (std::size_t r = 0; r < cd.size(); ++r)
    if (dec.lambdas[r]) v += indicator(cd.cycles[r]);
  return {permute(dec.tau_prime, v), dec.tau_prime};
}

Z2 phi_closed_form(const Permutation& sigma, const SignedPerm& tau) {
  const CentralizerDecomposition dec = decompose(sigma, tau);
  const CycleDecomposition cd = cycle_decomposition(sigma);
  Z2 sum;
  for (std::size_t r = 0; r < cd.size(); ++r)
    sum += dec.lambdas[r] * Z2(cd.cycles[r].size() - 1);
  return sum;
}

Z2 phi_acycle(const Permutation& sigma, const SignedPerm& tau) {
  if (sigma.degree() != tau.degree()) throw DegreeError("degree mismatch in phi_acycle");
  const CycleDecomposition cd = cycle_decomposition(sigma);
  const std::vector<std::size_t>* support = nullptr;
  for (const auto& cycle : cd.cycles) {
    if (cycle.size() == 1) continue;
    if (support != nullptr) throw std::invalid_argument("sigma has more than one nontrivial cycle");
    support = &cycle;
  }
  if (support == nullptr) throw std::invalid_argument("sigma is the identity");
  if (!tau.perm().is_identity() || tau.signs() != indicator(*support))
    throw std::invalid_argument("tau is not the indicator vector of the cycle of sigma");
  return Z2(support->size() - 1);
}

OrbitFactorization orbit_factorization(const Permutation& sigma,
                                       const CentralizerDecomposition& dec) {
  const std::size_t n = sigma.degree();
  const CycleDecomposition cd = cycle_decomposition(sigma);
  if (dec.lambdas.size() != cd.size())
    throw std::invalid_argument("lambda count does not match the cycles of sigma");
  const Permutation& tau_prime = dec.tau_prime;

  // τ' C τ'⁻¹ is the cycle through τ'(any point of C).
  std::vector<std::size_t> next(cd.size());
  for (std::size_t r = 0; r < cd.size(); ++r) next[r] = cd.owner[tau_prime(cd.cycles[r].front())];

  OrbitFactorization out;
  std::vector<bool> visited(cd.size(), false);
  // Cycle r starts at a smaller point than cycle r+1, so scanning r upward
  // emits orbits ordered by their smallest point.
  for (std::size_t r0 = 0; r0 < cd.size(); ++r0) {
    if (visited[r0]) continue;
    std::vector<std::size_t> orbit;
    for (std::size_t r = r0; !visited[r]; r = next[r]) {
      visited[r] = true;
      orbit.push_back(r);
    }
    std::sort(orbit.begin(), orbit.end());

    std::vector<bool> member(n, false);
    SignVector v;
    for (std::size_t r : orbit) {
      for (std::size_t i : cd.cycles[r]) member[i] = true;
      if (dec.lambdas[r]) v += indicator(cd.cycles[r]);
    }
    std::vector<std::size_t> index_set;
    std::vector<std::size_t> images(n);
    for (std::size_t i = 0; i < n; ++i) {
      images[i] = member[i] ? tau_prime(i) : i;
      if (member[i]) index_set.push_back(i);
    }
    const Permutation part = Permutation::from_images(images);

    out.factors.emplace_back(permute(part, v), part);
    out.orbits.push_back(std::move(orbit));
    out.index_sets.push_back(std::move(index_set));
  }
  return out;
}

}  // namespace hyperoct

#include "hyperoct/centralizer.hpp"

#include <stdexcept>
#include <string>
#include <utility>

#include "hyperoct/error.hpp"

namespace hyperoct {
namespace {

// A centralizing permutation is fixed by a target cycle and a rotation for
// every cycle of σ: τ'(C_r[p]) = C_{target[r]}[(p + shift[r]) mod |C_r|].
struct CycleMap {
  std::vector<std::size_t> target;
  std::vector<std::size_t> shift;
};

Permutation build_tau_prime(const CycleDecomposition& cd, const CycleMap& map) {
  std::vector<std::size_t> images(cd.owner.size());
  for (std::size_t r = 0; r < cd.size(); ++r) {
    const auto& from = cd.cycles[r];
    const auto& to = cd.cycles[map.target[r]];
    for (std::size_t p = 0; p < from.size(); ++p)
      images[from[p]] = to[(p + map.shift[r]) % to.size()];
  }
  return Permutation::from_images(images);
}

SignVector cycle_indicator(const CycleDecomposition& cd, std::uint64_t lambda_bits) {
  SignVector v;
  for (std::size_t r = 0; r < cd.size(); ++r) {
    if (((lambda_bits >> r) & 1U) == 0) continue;
    for (std::size_t i : cd.cycles[r]) v.flip(i);
  }
  return v;
}

SignedPerm assemble(const Permutation& tau_prime, SignVector v) {
  // τ'·v as a product in B_n: (0, τ')(v, id) = (τ'·v, τ').
  return {permute(tau_prime, v), tau_prime};
}

void enumerate_maps(const CycleDecomposition& cd, std::size_t r, std::vector<bool>& used,
                    CycleMap& map, const std::function<void(const CycleMap&)>& visit) {
  if (r == cd.size()) {
    visit(map);
    return;
  }
  const std::size_t len = cd.cycles[r].size();
  for (std::size_t s = 0; s < cd.size(); ++s) {
    if (used[s] || cd.cycles[s].size() != len) continue;
    used[s] = true;
    map.target[r] = s;
    for (std::size_t shift = 0; shift < len; ++shift) {
      map.shift[r] = shift;
      enumerate_maps(cd, r + 1, used, map, visit);
    }
    used[s] = false;
  }
}

}  // namespace

Permutation random_permutation(std::size_t n, SplitMix64& rng) {
  check_degree(n);
  std::vector<std::size_t> images(n);
  for (std::size_t i = 0; i < n; ++i) images[i] = i;
  for (std::size_t i = n; i > 1; --i) std::swap(images[i - 1], images[rng.below(i)]);
  return Permutation::from_images(images);
}

SignedPerm random_signed_perm(std::size_t n, SplitMix64& rng) {
  Permutation p = random_permutation(n, rng);
  return {SignVector(rng.next() & SignVector::ones(n).bits()), std::move(p)};
}

SignedPerm centralizer_sample(const Permutation& sigma, std::uint64_t seed) {
  SplitMix64 rng(seed);
  const CycleDecomposition cd = cycle_decomposition(sigma);
  const std::size_t j = cd.size();

  std::vector<std::vector<std::size_t>> by_length(sigma.degree() + 1);
  for (std::size_t r = 0; r < j; ++r) by_length[cd.cycles[r].size()].push_back(r);

  CycleMap map{std::vector<std::size_t>(j), std::vector<std::size_t>(j)};
  for (std::size_t len = 1; len < by_length.size(); ++len) {
    const auto& group = by_length[len];
    std::vector<std::size_t> shuffled = group;
    for (std::size_t i = shuffled.size(); i > 1; --i)
      std::swap(shuffled[i - 1], shuffled[rng.below(i)]);
    for (std::size_t i = 0; i < group.size(); ++i) {
      map.target[group[i]] = shuffled[i];
      map.shift[group[i]] = rng.below(len);
    }
  }

  std::uint64_t lambdas = 0;
  for (std::size_t r = 0; r < j; ++r)
    if (rng.coin()) lambdas |= 1ULL << r;

  return assemble(build_tau_prime(cd, map), cycle_indicator(cd, lambdas));
}

void for_each_centralizer_element(const Permutation& sigma,
                                  const std::function<void(const SignedPerm&)>& visit) {
  if (sigma.degree() > kEnumerationCap)
    throw DegreeError("centralizer enumeration is capped at degree " +
                      std::to_string(kEnumerationCap));
  const CycleDecomposition cd = cycle_decomposition(sigma);
  const std::size_t j = cd.size();
  CycleMap map{std::vector<std::size_t>(j), std::vector<std::size_t>(j)};
  std::vector<bool> used(j, false);
  enumerate_maps(cd, 0, used, map, [&](const CycleMap& m) {
    const Permutation tau_prime = build_tau_prime(cd, m);
    for (std::uint64_t lambdas = 0; lambdas < (1ULL << j); ++lambdas)
      visit(assemble(tau_prime, cycle_indicator(cd, lambdas)));
  });
}

std::vector<SignedPerm> centralizer_enumerate(const Permutation& sigma) {
  std::vector<SignedPerm> out;
  for_each_centralizer_element(sigma, [&](const SignedPerm& g) { out.push_back(g); });
  return out;
}

std::uint64_t centralizer_order(const Permutation& sigma) {
  const CycleDecomposition cd = cycle_decomposition(sigma);
  std::vector<std::uint64_t> count(sigma.degree() + 1, 0);
  for (const auto& c : cd.cycles) ++count[c.size()];
  std::uint64_t order = 1;
  const auto times = [&](std::uint64_t f) {
    if (__builtin_mul_overflow(order, f, &order))
      throw std::overflow_error("centralizer order exceeds 64 bits");
  };
  for (std::size_t r = 0; r < cd.size(); ++r) times(2);
  for (std::size_t len = 1; len < count.size(); ++len)
    for (std::uint64_t k = 1; k <= count[len]; ++k) times(len * k);
  return order;
}

}  // namespace hyperoct

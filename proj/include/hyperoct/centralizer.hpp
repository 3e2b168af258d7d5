#ifndef HYPEROCT_CENTRALIZER_HPP
#define HYPEROCT_CENTRALIZER_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "hyperoct/random.hpp"
#include "hyperoct/signed_perm.hpp"

namespace hyperoct {

// The centralizer of σ ∈ S_n in B_n is C_{S_n}(σ) ⋉ {σ-invariant vectors}.
// An element of C_{S_n}(σ) maps each cycle onto a cycle of equal length with
// some rotation; a σ-invariant vector is constant on every cycle.

/// Uniform over S_n (Fisher-Yates).
Permutation random_permutation(std::size_t n, SplitMix64& rng);
/// Uniform over B_n.
SignedPerm random_signed_perm(std::size_t n, SplitMix64& rng);

/// A uniformly random element of C_{B_n}(σ), determined by `seed`.
SignedPerm centralizer_sample(const Permutation& sigma, std::uint64_t seed);

/// Visits each element of C_{B_n}(σ) exactly once.
/// Throws DegreeError if σ.degree() > kEnumerationCap.
void for_each_centralizer_element(const Permutation& sigma,
                                  const std::function<void(const SignedPerm&)>& visit);

std::vector<SignedPerm> centralizer_enumerate(const Permutation& sigma);

/// |C_{B_n}(σ)| = 2^j · Π_L L^{c_L} c_L!, with j cycles and c_L cycles of length L.
/// Throws std::overflow_error past 64 bits.
std::uint64_t centralizer_order(const Permutation& sigma);

}  // namespace hyperoct

#endif  // HYPEROCT_CENTRALIZER_HPP

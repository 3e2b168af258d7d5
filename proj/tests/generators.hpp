// Seeded generators for property tests.
#ifndef HYPEROCT_TESTS_GENERATORS_HPP
#define HYPEROCT_TESTS_GENERATORS_HPP

#include <utility>

#include "hyperoct/centralizer.hpp"
#include "hyperoct/random.hpp"
#include "hyperoct/signed_perm.hpp"

namespace gen {

// A random commuting pair in B_n. Half the time a conjugate of
// (σ, τ ∈ C(σ)) with σ ∈ S_n; otherwise two powers of one random element,
// optionally times the central all-ones vector, which reaches pairs whose
// cycles carry odd sign sums. The order of the pair is randomized.
inline std::pair<hyperoct::SignedPerm, hyperoct::SignedPerm> commuting_pair(std::size_t n,
                                                                            hyperoct::SplitMix64& rng) {
  using namespace hyperoct;
  SignedPerm a(n), b(n);
  if (rng.coin()) {
    const Permutation sigma = random_permutation(n, rng);
    const SignedPerm g = random_signed_perm(n, rng);
    a = conjugate(g, SignedPerm::from_perm(sigma));
    b = conjugate(g, centralizer_sample(sigma, rng.next()));
  } else {
    const SignedPerm h = random_signed_perm(n, rng);
    const SignedPerm z = SignedPerm::from_signs(n, SignVector::ones(n));
    a = power(h, rng.below(2 * n + 1));
    b = power(h, rng.below(2 * n + 1));
    if (rng.coin()) a = a * z;
    if (rng.coin()) b = b * z;
  }
  if (rng.coin()) std::swap(a, b);
  return {a, b};
}

}  // namespace gen

#endif  // HYPEROCT_TESTS_GENERATORS_HPP

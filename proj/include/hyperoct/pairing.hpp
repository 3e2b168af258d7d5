#ifndef HYPEROCT_PAIRING_HPP
#define HYPEROCT_PAIRING_HPP

#include <cstddef>
#include <vector>

#include "hyperoct/permutation.hpp"
#include "hyperoct/signed_perm.hpp"
#include "hyperoct/z2.hpp"

namespace hyperoct {

/// φ(σ, τ) = [σ̃, τ̃] ∈ {1, ε}, returned as the exponent of ε.
///
/// Computed directly in G_n from the canonical lifts. Throws
/// NotCommutingError unless στ = τσ in B_n.
Z2 phi(const SignedPerm& sigma, const SignedPerm& tau);

/// τ = τ'·v with τ' ∈ C_{S_n}(σ) and v = Σ_r λ_r·1_{C_r} constant on the
/// cycles C_r of σ. `lambdas` follows the canonical cycle order.
struct CentralizerDecomposition {
  Permutation tau_prime;
  std::vector<Z2> lambdas;
};

/// The unique decomposition of τ ∈ C_{B_n}(σ). Throws NotCommutingError.
CentralizerDecomposition decompose(const Permutation& sigma, const SignedPerm& tau);

/// τ'·v for the given decomposition.
SignedPerm reassemble(const Permutation& sigma, const CentralizerDecomposition& dec);

/// Σ_r λ_r (d_r − 1) mod 2, where d_r is the length of C_r.
/// Throws NotCommutingError.
Z2 phi_closed_form(const Permutation& sigma, const SignedPerm& tau);

/// (k − 1) mod 2 for a single k-cycle σ and τ the indicator vector of its
/// support. Throws std::invalid_argument if σ is not a single nontrivial
/// cycle or τ is not exactly that indicator vector.
Z2 phi_acycle(const Permutation& sigma, const SignedPerm& tau);

/// Splitting of τ ∈ C_{B_n}(σ) along the orbits of ⟨τ'⟩ acting on the
/// cycles of σ by conjugation.
struct OrbitFactorization {
  /// Cycle indices of each orbit, ascending. Orbits are ordered by the
  /// smallest point of their index set.
  std::vector<std::vector<std::size_t>> orbits;
  /// Points covered by each orbit, ascending; these partition {0..n-1}.
  std::vector<std::vector<std::size_t>> index_sets;
  /// τ'_y v_y for each orbit; pairwise commuting with product τ.
  std::vector<SignedPerm> factors;
};

OrbitFactorization orbit_factorization(const Permutation& sigma,
                                       const CentralizerDecomposition& dec);

}  // namespace hyperoct

#endif  // HYPEROCT_PAIRING_HPP

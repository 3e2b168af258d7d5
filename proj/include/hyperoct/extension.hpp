#ifndef HYPEROCT_EXTENSION_HPP
#define HYPEROCT_EXTENSION_HPP

#include <cstddef>
#include <functional>

#include "hyperoct/signed_perm.hpp"
#include "hyperoct/z2.hpp"

namespace hyperoct {

/// An element ((a, b), σ) of G_n = H_n ⋊ S_n.
///
/// H_n is the set of pairs (a, b) ∈ (Z/2)^n × Z/2 with
///   (a₁,b₁)(a₂,b₂) = (a₁+a₂, b₁+b₂+Σ_{i<j} a₁ᵢ a₂ⱼ),
/// embedded as the elements with σ = id. x_i = (e_i, 0), ε = (0, 1).
class ExtElement {
 public:
  /// The unit of G_n.
  explicit ExtElement(std::size_t n) : perm_(n) {}
  ExtElement(SignVector vec, Z2 central, Permutation perm);

  static ExtElement generator(std::size_t n, std::size_t i);  // x_i, 0-based i
  static ExtElement epsilon(std::size_t n);
  static ExtElement from_perm(Permutation perm) { return {SignVector{}, Z2{}, std::move(perm)}; }

  std::size_t degree() const noexcept { return perm_.degree(); }
  SignVector vec() const noexcept { return vec_; }
  Z2 central() const noexcept { return central_; }
  const Permutation& perm() const noexcept { return perm_; }

  bool in_hn() const noexcept { return perm_.is_identity(); }
  bool is_identity() const noexcept { return vec_.is_zero() && !central_ && perm_.is_identity(); }

  friend bool operator==(const ExtElement&, const ExtElement&) = default;

 private:
  SignVector vec_;
  Z2 central_;
  Permutation perm_;
};

/// Σ_{i<j} a_i b_j mod 2.
Z2 ordered_pair_parity(SignVector a, SignVector b);

/// The H_n law. Throws std::invalid_argument if either perm part is not the
/// identity, DegreeError on mismatch.
ExtElement hn_mul(const ExtElement& g, const ExtElement& h);
/// (a, b + Σ_{i<j} a_i a_j). Throws std::invalid_argument outside H_n.
ExtElement hn_inv(const ExtElement& g);

/// The automorphism of H_n induced by σ(x_i) = x_{σ(i)}, σ(ε) = ε.
///
/// Writing (a, 0) as the product of its x_i in descending index order and
/// applying σ letter by letter, restoring descending order costs one ε per
/// pair i < j in supp(a) with σ(i) > σ(j). So σ(a, b) = (σ·a, b + inv_σ(a)).
/// Plain coordinate permutation with b fixed is not a homomorphism.
ExtElement act(const Permutation& sigma, const ExtElement& h);

/// (h₁,σ₁)(h₂,σ₂) = (h₁·σ₁(h₂), σ₁σ₂).
ExtElement gn_mul(const ExtElement& g, const ExtElement& h);
ExtElement gn_inv(const ExtElement& g);
/// g h g⁻¹ h⁻¹
ExtElement commutator(const ExtElement& g, const ExtElement& h);

inline ExtElement operator*(const ExtElement& g, const ExtElement& h) { return gn_mul(g, h); }

/// Canonical section B_n → G_n, (a, σ) ↦ ((a, 0), σ).
ExtElement lift(const SignedPerm& g);
/// G_n → B_n, forgetting the central bit.
SignedPerm project(const ExtElement& g);

/// The 2-cocycle of the canonical section: lift(g)·lift(h) = ε^c · lift(gh).
/// Its class is the extension class of G_n over B_n.
Z2 cocycle(const SignedPerm& g, const SignedPerm& h);

/// All 2^{n+1} elements of H_n.
void for_each_hn_element(std::size_t n, const std::function<void(const ExtElement&)>& visit);
/// All 2^{n+1}·n! elements of G_n. Throws DegreeError above kEnumerationCap.
void for_each_gn_element(std::size_t n, const std::function<void(const ExtElement&)>& visit);

}  // namespace hyperoct

#endif  // HYPEROCT_EXTENSION_HPP

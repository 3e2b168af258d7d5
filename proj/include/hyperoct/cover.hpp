#ifndef HYPEROCT_COVER_HPP
#define HYPEROCT_COVER_HPP

#include <cstddef>
#include <vector>

#include "hyperoct/pairing.hpp"
#include "hyperoct/signed_perm.hpp"
#include "hyperoct/z2.hpp"

namespace hyperoct {

/// Monodromy (m, ℓ) of one boundary torus: m the meridian, ℓ the longitude.
/// Invariants: m has zero sign vector, and m, ℓ commute.
class TorusMonodromy {
 public:
  /// Throws HypothesisViolation if m has a nonzero sign vector (use
  /// normalize_meridian first), NotCommutingError if m and ℓ do not commute.
  TorusMonodromy(SignedPerm meridian, SignedPerm longitude);

  std::size_t degree() const noexcept { return meridian_.degree(); }
  const SignedPerm& meridian() const noexcept { return meridian_; }
  const SignedPerm& longitude() const noexcept { return longitude_; }

 private:
  SignedPerm meridian_;
  SignedPerm longitude_;
};

struct MeridianNormalization {
  /// (u, id) with u + m.perm·u = m.signs, lexicographically least.
  SignedPerm conjugator;
  TorusMonodromy torus;
};

/// Conjugates (m, ℓ) simultaneously by (u, id) so that m lands in S_n.
///
/// Writing m = (w, σ), the conjugate has signs u + w + σ·u, so we need
/// u + σ·u = w. On a cycle (c₀ c₁ … c_{d−1}) this reads u_{c_{p+1}} + u_{c_p} =
/// w_{c_{p+1}}; it is solvable iff w sums to 0 over the cycle, and fixing
/// u = 0 at the cycle's smallest point gives the lexicographically least
/// solution. Conjugation by permutations only relabels cycles, so a cycle
/// with odd w-sum means no conjugate of m lies in S_n: the double cover is
/// branched over that component.
///
/// Throws HypothesisViolation naming the offending cycle, or
/// NotCommutingError if m and ℓ do not commute.
MeridianNormalization normalize_meridian(const SignedPerm& meridian,
                                         const SignedPerm& longitude);

/// One component K̃ of the preimage of the branch component: an orbit of
/// ⟨ℓ'⟩ acting by conjugation on the cycles of m.
struct ComponentData {
  std::vector<std::size_t> orbit_cycles;  ///< canonical cycle indices of m
  std::vector<std::size_t> indices;       ///< points covered, ascending
  std::size_t e = 0;                      ///< ramification index (cycle length)
  std::size_t t = 0;                      ///< number of cycles in the orbit
  std::size_t d = 0;                      ///< cycles in the orbit with λ_r = 1
  Z2 alpha;                               ///< ⟨[K̃], α⟩, from alpha_pairing
};

/// Components ordered by smallest point. Σ e·t = n.
std::vector<ComponentData> components(const TorusMonodromy& tm);

/// The sign of the longitude lift over component c at point k: the k-th
/// entry of w, where ℓ^t = ℓ'^t·w. Computed from ℓ^t in B_n, not from the
/// λ coefficients. Throws std::out_of_range if k is not in c.indices.
///
/// The lift of the component also winds some a times around the meridian,
/// but m ∈ S_n carries no signs and commutes with ℓ, so m^a only relabels
/// points of the same component and a never enters the parity.
Z2 alpha_entry(const TorusMonodromy& tm, const ComponentData& c, std::size_t k);

/// alpha_entry at the component's smallest point, after checking that every
/// point of the component gives the same entry (std::logic_error if not).
Z2 alpha_pairing(const TorusMonodromy& tm, const ComponentData& c);

/// ∫_T γ = φ(m, ℓ).
Z2 torus_integral(const TorusMonodromy& tm);

struct TorusIdentityReport {
  Z2 lhs;  ///< torus_integral
  Z2 rhs;  ///< Σ_K̃ (e − 1)·alpha mod 2
  std::vector<ComponentData> components;

  bool holds() const noexcept { return lhs == rhs; }
};

/// Evaluates both sides of ∫_T γ = Σ_K̃ (e_K̃ − 1)⟨[K̃], α⟩ independently.
TorusIdentityReport verify_torus_identity(const TorusMonodromy& tm);

struct BranchDivisorReport {
  Z2 divisor_pairing;  ///< Σ over all tori and components of (e − 1)·alpha
  Z2 integral_sum;     ///< Σ over all tori of ∫_T γ
  std::vector<TorusIdentityReport> tori;
};

/// The pairing of the branch divisor with α. It vanishes when the tori are
/// the full boundary of a closed cover; an arbitrary collection need not.
BranchDivisorReport branch_divisor_pairing(const std::vector<TorusMonodromy>& tori);

}  // namespace hyperoct

#endif  // HYPEROCT_COVER_HPP

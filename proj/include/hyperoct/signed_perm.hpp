#ifndef HYPEROCT_SIGNED_PERM_HPP
#define HYPEROCT_SIGNED_PERM_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <utility>

#include "hyperoct/permutation.hpp"

namespace hyperoct {

/// A vector in (Z/2)^n as a bit mask; bit i is coordinate i (0-based).
class SignVector {
 public:
  constexpr SignVector() noexcept = default;
  constexpr explicit SignVector(std::uint64_t bits) noexcept : bits_(bits) {}

  static constexpr SignVector unit(std::size_t i) noexcept { return SignVector(1ULL << i); }
  /// All-ones vector of length n.
  static constexpr SignVector ones(std::size_t n) noexcept {
    return SignVector(n >= 64 ? ~0ULL : (1ULL << n) - 1);
  }

  constexpr std::uint64_t bits() const noexcept { return bits_; }
  constexpr bool test(std::size_t i) const noexcept { return (bits_ >> i) & 1U; }
  constexpr bool is_zero() const noexcept { return bits_ == 0; }
  constexpr int weight() const noexcept { return std::popcount(bits_); }
  constexpr void flip(std::size_t i) noexcept { bits_ ^= 1ULL << i; }

  friend constexpr SignVector operator+(SignVector a, SignVector b) noexcept {
    return SignVector(a.bits_ ^ b.bits_);
  }
  constexpr SignVector& operator+=(SignVector o) noexcept {
    bits_ ^= o.bits_;
    return *this;
  }
  friend constexpr bool operator==(SignVector, SignVector) noexcept = default;

 private:
  std::uint64_t bits_ = 0;
};

/// σ·v: coordinate i of v moves to coordinate σ(i).
SignVector permute(const Permutation& sigma, SignVector v);

/// An element (a, σ) of B_n = (Z/2)^n ⋊ S_n.
class SignedPerm {
 public:
  /// The unit of B_n.
  explicit SignedPerm(std::size_t n) : perm_(n) {}
  /// Throws DegreeError if `signs` has bits at or above perm.degree().
  SignedPerm(SignVector signs, Permutation perm);

  static SignedPerm from_perm(Permutation perm) { return {SignVector{}, std::move(perm)}; }
  static SignedPerm from_signs(std::size_t n, SignVector signs) { return {signs, Permutation(n)}; }

  std::size_t degree() const noexcept { return perm_.degree(); }
  SignVector signs() const noexcept { return signs_; }
  const Permutation& perm() const noexcept { return perm_; }
  bool is_identity() const noexcept { return signs_.is_zero() && perm_.is_identity(); }

  friend bool operator==(const SignedPerm&, const SignedPerm&) = default;

 private:
  SignVector signs_;
  Permutation perm_;
};

/// (a₁,σ₁)(a₂,σ₂) = (a₁ + σ₁·a₂, σ₁σ₂). Throws DegreeError on mismatch.
SignedPerm bn_mul(const SignedPerm& g, const SignedPerm& h);
SignedPerm inverse(const SignedPerm& g);
/// g h g⁻¹
SignedPerm conjugate(const SignedPerm& g, const SignedPerm& h);
SignedPerm power(const SignedPerm& g, std::size_t k);

inline SignedPerm operator*(const SignedPerm& g, const SignedPerm& h) { return bn_mul(g, h); }

bool is_commuting(const SignedPerm& g, const SignedPerm& h);

/// Visits all 2^n·n! elements of B_n. Throws DegreeError above kEnumerationCap.
void for_each_signed_perm(std::size_t n, const std::function<void(const SignedPerm&)>& visit);

}  // namespace hyperoct

#endif  // HYPEROCT_SIGNED_PERM_HPP

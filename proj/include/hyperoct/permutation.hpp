#ifndef HYPEROCT_PERMUTATION_HPP
#define HYPEROCT_PERMUTATION_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace hyperoct {

/// Largest supported degree. Sign vectors are single 64-bit words.
inline constexpr std::size_t kMaxDegree = 64;

/// Largest degree accepted by the exhaustive enumerators (8! * 2^8 elements
/// of B_8 is the worst case).
inline constexpr std::size_t kEnumerationCap = 8;

/// Throws DegreeError unless 1 <= n <= kMaxDegree.
void check_degree(std::size_t n);

/// A permutation of {0, ..., n-1}, stored as an image table.
///
/// Indices are 0-based throughout the library. Conversion to the 1-based
/// cycle notation used in text happens in literal.hpp and the CLI.
class Permutation {
 public:
  /// The identity of degree n.
  explicit Permutation(std::size_t n);

  /// Builds from an image table; throws std::invalid_argument if `images`
  /// is not a bijection on {0..n-1}.
  static Permutation from_images(std::span<const std::size_t> images);

  /// Builds from disjoint cycles (0-based). Points not mentioned are fixed.
  static Permutation from_cycles(std::size_t n,
                                 const std::vector<std::vector<std::size_t>>& cycles);

  std::size_t degree() const noexcept { return degree_; }
  std::size_t operator()(std::size_t i) const noexcept { return image_[i]; }
  bool is_identity() const noexcept;
  Permutation inverse() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend Permutation compose(const Permutation& p, const Permutation& q);

 private:
  // Entries at positions >= degree_ hold their own index, so defaulted
  // equality compares only the meaningful prefix plus the degree.
  std::uint8_t degree_ = 0;
  std::array<std::uint8_t, kMaxDegree> image_{};
};

/// p∘q: maps i to p(q(i)). Throws DegreeError on mismatch.
Permutation compose(const Permutation& p, const Permutation& q);

inline Permutation operator*(const Permutation& p, const Permutation& q) {
  return compose(p, q);
}

/// Disjoint cycles in canonical order: each cycle starts at its smallest
/// point, cycles sorted by that point, fixed points kept as 1-cycles.
struct CycleDecomposition {
  std::vector<std::vector<std::size_t>> cycles;
  /// owner[i] is the index in `cycles` of the cycle containing point i.
  std::vector<std::size_t> owner;

  std::size_t size() const noexcept { return cycles.size(); }
  std::vector<std::size_t> lengths() const;
};

CycleDecomposition cycle_decomposition(const Permutation& p);

/// Reassembles a permutation from its cycles.
Permutation from_decomposition(std::size_t n, const CycleDecomposition& d);

/// Visits all n! permutations of degree n in lexicographic image order.
/// Throws DegreeError above kEnumerationCap.
void for_each_permutation(std::size_t n, const std::function<void(const Permutation&)>& visit);

}  // namespace hyperoct

#endif  // HYPEROCT_PERMUTATION_HPP

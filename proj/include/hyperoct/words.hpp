#ifndef HYPEROCT_WORDS_HPP
#define HYPEROCT_WORDS_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "hyperoct/extension.hpp"
#include "hyperoct/z2.hpp"

namespace hyperoct {

/// A letter x_i (0-based index) or ε.
struct Token {
  enum class Kind { Generator, Epsilon };

  Kind kind = Kind::Epsilon;
  std::size_t index = 0;

  static Token x(std::size_t i) { return {Kind::Generator, i}; }
  static Token eps() { return {Kind::Epsilon, 0}; }

  friend bool operator==(const Token&, const Token&) = default;
};

/// A word over x_1..x_n and ε. Every generator is an involution, so words
/// carry no inverse letters.
struct GenWord {
  std::size_t degree = 0;
  std::vector<Token> tokens;
};

/// x_{i_1}⋯x_{i_k} ε^δ with strictly ascending (0-based) indices.
struct NormalForm {
  std::vector<std::size_t> indices;
  Z2 delta;

  friend bool operator==(const NormalForm&, const NormalForm&) = default;
};

/// Brings w into normal form using x_i² = ε² = 1, x_i x_j = ε x_j x_i and
/// εx_i = x_i ε. Throws DegreeError if a token index is outside 0..degree-1.
///
/// δ is the number of ε letters plus the number of strict inversions among the
/// generator letters, mod 2: a stable sort by adjacent swaps exchanges exactly
/// the strictly inverted pairs, each swap costs one ε, and equal neighbours
/// then cancel for free. Only the parity of the count of each index seen so
/// far is needed, so one pass with a bit mask suffices.
NormalForm normal_form(const GenWord& w);

/// Product of the letters in H_n.
ExtElement evaluate(const GenWord& w);
ExtElement evaluate(const NormalForm& nf, std::size_t n);

/// Parses whitespace-separated `x3`, `eps` tokens (1-based); a trailing `'`
/// marks an inverse and is dropped. Throws ParseError or DegreeError.
GenWord parse_word(std::string_view text, std::size_t n);

/// `x1 x3 eps`, or `1` for the empty word.
std::string to_string(const NormalForm& nf);

}  // namespace hyperoct

#endif  // HYPEROCT_WORDS_HPP

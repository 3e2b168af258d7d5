#ifndef HYPEROCT_LITERAL_HPP
#define HYPEROCT_LITERAL_HPP

#include <cstddef>
#include <string>
#include <string_view>

#include "hyperoct/signed_perm.hpp"

namespace hyperoct {

/// Parses `cycles:(1 2)(4 5); signs:01010` for degree n. Cycles are 1-based
/// and disjoint, fixed points may be omitted, `cycles:()` is the identity.
/// `signs` must have exactly n characters; character i is coordinate i.
///
/// Throws ParseError (line 0, column within `text`) on any malformed input.
SignedPerm parse_signed_perm(std::string_view text, std::size_t n);

/// Inverse of parse_signed_perm; fixed points are omitted.
std::string to_literal(const SignedPerm& g);

/// Cycle notation alone, e.g. `(1 2)(4 5)`, or `()` for the identity.
std::string to_cycle_string(const Permutation& p);

/// Bit string, coordinate 1 first.
std::string to_bit_string(SignVector v, std::size_t n);

}  // namespace hyperoct

#endif  // HYPEROCT_LITERAL_HPP

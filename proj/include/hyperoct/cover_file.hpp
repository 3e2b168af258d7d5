#ifndef HYPEROCT_COVER_FILE_HPP
#define HYPEROCT_COVER_FILE_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "hyperoct/cover.hpp"
#include "hyperoct/signed_perm.hpp"

namespace hyperoct {

// Cover presentation text format, line oriented, `#` starts a comment:
//
//   n 2
//   gen a = cycles:(1 2); signs:00
//   gen b = cycles:(); signs:11
//   rel a b a' b'
//   torus a | b b
//
// Words are whitespace-separated generator names; a trailing `'` inverts.
// A word evaluates left to right: `a b` is image(a)·image(b).

struct Letter {
  std::size_t generator = 0;  ///< index into CoverPresentation::generators
  bool inverse = false;
};

struct Word {
  std::size_t line = 0;
  std::string text;
  std::vector<Letter> letters;
};

struct Generator {
  std::string name;
  SignedPerm image;
};

struct TorusSpec {
  std::size_t line = 0;
  Word meridian;
  Word longitude;
};

struct CoverPresentation {
  std::size_t degree = 0;
  std::vector<Generator> generators;
  std::vector<Word> relators;
  std::vector<TorusSpec> tori;
};

/// Throws ParseError with line and column on malformed text, unknown
/// generators, duplicate or missing declarations, and sign strings whose
/// length differs from n.
CoverPresentation parse_cover(std::string_view text);

SignedPerm evaluate(const CoverPresentation& cp, const Word& w);

enum class CheckStatus {
  Pass,
  Violation,        ///< relator, commutation or hypothesis violation
  IdentityFailure,  ///< per-torus identity or global sum
};

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::Pass;
  std::string detail;
};

struct CoverReport {
  std::vector<CheckResult> checks;
  /// Over the tori that passed normalization and commutation.
  BranchDivisorReport global;

  /// 0 all pass, 2 any violation, otherwise 3 on an identity or global-sum
  /// failure.
  int exit_code() const;
};

/// Runs every check and records one CheckResult each, in this order:
/// relators, then per torus commutation, meridian, identity, then the two
/// global sums.
CoverReport check_cover(const CoverPresentation& cp);

}  // namespace hyperoct

#endif  // HYPEROCT_COVER_FILE_HPP

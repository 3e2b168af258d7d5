// Test-only reference computations. Nothing here calls the library's group
// arithmetic; the library types appear only at the conversion boundary.
#ifndef HYPEROCT_TESTS_ORACLES_HPP
#define HYPEROCT_TESTS_ORACLES_HPP

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "hyperoct/signed_perm.hpp"

namespace oracle {

// A signed permutation as a bijection of the 2n signed points
// (i, s), encoded as 2*i + s. (a, σ) sends (i, s) to (σ(i), s + a_{σ(i)}),
// which is a faithful action of B_n with the semidirect law.
using SignedPoints = std::vector<std::size_t>;

inline SignedPoints to_points(const hyperoct::SignedPerm& g) {
  const std::size_t n = g.degree();
  SignedPoints out(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = g.perm()(i);
    const std::size_t flip = g.signs().test(j) ? 1 : 0;
    out[2 * i] = 2 * j + flip;
    out[2 * i + 1] = 2 * j + (1 - flip);
  }
  return out;
}

// Function composition f∘g.
inline SignedPoints compose(const SignedPoints& f, const SignedPoints& g) {
  SignedPoints out(g.size());
  for (std::size_t x = 0; x < g.size(); ++x) out[x] = f[g[x]];
  return out;
}

// Image table of p∘q for permutations given as 0-based image lists.
inline std::vector<std::size_t> compose_images(const std::vector<std::size_t>& p,
                                               const std::vector<std::size_t>& q) {
  std::vector<std::size_t> out(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) out[i] = p[q[i]];
  return out;
}

// Words over x_0..x_{n-1} and ε, brought to normal form by literally
// applying x_i x_i -> 1, x_i x_j -> x_j x_i ε (i > j), ε x -> x ε, ε ε -> 1
// until no rule applies.
struct Letter {
  bool eps;
  std::size_t index;
  bool operator==(const Letter&) const = default;
};
using Word = std::vector<Letter>;

inline Letter x(std::size_t i) { return {false, i}; }
inline Letter eps() { return {true, 0}; }

inline std::pair<std::vector<std::size_t>, int> rewrite(Word w) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t p = 0; p + 1 < w.size(); ++p) {
      const Letter a = w[p];
      const Letter b = w[p + 1];
      if (a.eps && b.eps) {
        w.erase(w.begin() + static_cast<std::ptrdiff_t>(p), w.begin() + static_cast<std::ptrdiff_t>(p + 2));
      } else if (a.eps && !b.eps) {
        std::swap(w[p], w[p + 1]);
      } else if (!a.eps && !b.eps && a.index == b.index) {
        w.erase(w.begin() + static_cast<std::ptrdiff_t>(p), w.begin() + static_cast<std::ptrdiff_t>(p + 2));
      } else if (!a.eps && !b.eps && a.index > b.index) {
        std::swap(w[p], w[p + 1]);
        w.insert(w.begin() + static_cast<std::ptrdiff_t>(p + 2), eps());
      } else {
        continue;
      }
      changed = true;
      break;
    }
  }
  std::vector<std::size_t> indices;
  int delta = 0;
  for (const Letter& l : w) {
    if (l.eps) delta = 1;
    else indices.push_back(l.index);
  }
  return {indices, delta};
}

// σ(x_i) = x_{σ(i)}, σ(ε) = ε, applied letter by letter.
inline Word act(const std::vector<std::size_t>& sigma, const Word& w) {
  Word out;
  for (const Letter& l : w) out.push_back(l.eps ? l : x(sigma[l.index]));
  return out;
}

// Normal form as a word.
inline Word as_word(const std::pair<std::vector<std::size_t>, int>& nf) {
  Word w;
  for (std::size_t i : nf.first) w.push_back(x(i));
  if (nf.second) w.push_back(eps());
  return w;
}

// Sort key for comparing sets of elements.
inline std::vector<std::size_t> key(const hyperoct::SignedPerm& g) {
  std::vector<std::size_t> k{static_cast<std::size_t>(g.signs().bits())};
  for (std::size_t i = 0; i < g.degree(); ++i) k.push_back(g.perm()(i));
  return k;
}

inline std::vector<std::vector<std::size_t>> sorted_keys(const std::vector<hyperoct::SignedPerm>& gs) {
  std::vector<std::vector<std::size_t>> out;
  for (const auto& g : gs) out.push_back(key(g));
  std::sort(out.begin(), out.end());
  return out;
}

// All elements of B_n commuting with g, by scanning the whole group with the
// signed-point representation.
inline std::vector<hyperoct::SignedPerm> brute_force_centralizer(const hyperoct::SignedPerm& g) {
  std::vector<hyperoct::SignedPerm> out;
  const SignedPoints gp = to_points(g);
  hyperoct::for_each_signed_perm(g.degree(), [&](const hyperoct::SignedPerm& h) {
    const SignedPoints hp = to_points(h);
    if (compose(gp, hp) == compose(hp, gp)) out.push_back(h);
  });
  return out;
}

}  // namespace oracle

#endif  // HYPEROCT_TESTS_ORACLES_HPP

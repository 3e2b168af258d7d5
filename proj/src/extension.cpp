#include "hyperoct/extension.hpp"

#include <stdexcept>
#include <string>

#include "hyperoct/error.hpp"

namespace hyperoct {
namespace {

constexpr std::uint64_t below_mask(std::size_t j) { return (1ULL << j) - 1; }
constexpr std::uint64_t above_mask(std::size_t j) { return j >= 63 ? 0 : ~0ULL << (j + 1); }

void require_same_degree(const ExtElement& g, const ExtElement& h) {
  if (g.degree() != h.degree())
    throw DegreeError("degree mismatch: " + std::to_string(g.degree()) + " vs " +
                      std::to_string(h.degree()));
}

void require_hn(const ExtElement& g, const char* op) {
  if (!g.in_hn()) throw std::invalid_argument(std::string(op) + ": element is not in H_n");
}

// Parity of #{i < j in supp(a) : σ(i) > σ(j)}.
Z2 inversion_parity(const Permutation& sigma, SignVector a) {
  std::uint64_t seen = 0;
  unsigned count = 0;
  for (std::uint64_t bits = a.bits(); bits != 0; bits &= bits - 1) {
    const std::size_t image = sigma(static_cast<std::size_t>(std::countr_zero(bits)));
    count += static_cast<unsigned>(std::popcount(seen & above_mask(image)));
    seen |= 1ULL << image;
  }
  return Z2(count);
}

}  // namespace

ExtElement::ExtElement(SignVector vec, Z2 central, Permutation perm)
    : vec_(vec), central_(central), perm_(std::move(perm)) {
  if ((vec_.bits() & ~SignVector::ones(perm_.degree()).bits()) != 0)
    throw DegreeError("vector longer than degree " + std::to_string(perm_.degree()));
}

ExtElement ExtElement::generator(std::size_t n, std::size_t i) {
  if (i >= n) throw DegreeError("generator index out of range");
  return {SignVector::unit(i), Z2{}, Permutation(n)};
}

ExtElement ExtElement::epsilon(std::size_t n) { return {SignVector{}, Z2(1), Permutation(n)}; }

Z2 ordered_pair_parity(SignVector a, SignVector b) {
  unsigned count = 0;
  for (std::uint64_t bits = b.bits(); bits != 0; bits &= bits - 1) {
    const auto j = static_cast<std::size_t>(std::countr_zero(bits));
    count += static_cast<unsigned>(std::popcount(a.bits() & below_mask(j)));
  }
  return Z2(count);
}

ExtElement hn_mul(const ExtElement& g, const ExtElement& h) {
  require_same_degree(g, h);
  require_hn(g, "hn_mul");
  require_hn(h, "hn_mul");
  return {g.vec() + h.vec(), g.central() + h.central() + ordered_pair_parity(g.vec(), h.vec()),
          g.perm()};
}

ExtElement hn_inv(const ExtElement& g) {
  require_hn(g, "hn_inv");
  return {g.vec(), g.central() + ordered_pair_parity(g.vec(), g.vec()), g.perm()};
}

ExtElement act(const Permutation& sigma, const ExtElement& h) {
  require_hn(h, "act");
  if (sigma.degree() != h.degree()) throw DegreeError("degree mismatch in act");
  return {permute(sigma, h.vec()), h.central() + inversion_parity(sigma, h.vec()), h.perm()};
}

ExtElement gn_mul(const ExtElement& g, const ExtElement& h) {
  require_same_degree(g, h);
  const std::size_t n = g.degree();
  const ExtElement g_part{g.vec(), g.central(), Permutation(n)};
  const ExtElement h_part = act(g.perm(), ExtElement{h.vec(), h.central(), Permutation(n)});
  const ExtElement product = hn_mul(g_part, h_part);
  return {product.vec(), product.central(), g.perm() * h.perm()};
}

ExtElement gn_inv(const ExtElement& g) {
  const std::size_t n = g.degree();
  Permutation inv = g.perm().inverse();
  const ExtElement h = act(inv, hn_inv(ExtElement{g.vec(), g.central(), Permutation(n)}));
  return {h.vec(), h.central(), std::move(inv)};
}

ExtElement commutator(const ExtElement& g, const ExtElement& h) {
  return g * h * gn_inv(g) * gn_inv(h);
}

ExtElement lift(const SignedPerm& g) { return {g.signs(), Z2{}, g.perm()}; }

SignedPerm project(const ExtElement& g) { return {g.vec(), g.perm()}; }

Z2 cocycle(const SignedPerm& g, const SignedPerm& h) {
  // lift(gh) has central bit 0, so the central bit of the product is c(g, h).
  return (lift(g) * lift(h)).central();
}

void for_each_hn_element(std::size_t n, const std::function<void(const ExtElement&)>& visit) {
  check_degree(n);
  if (n > kEnumerationCap)
    throw DegreeError("enumeration is capped at degree " + std::to_string(kEnumerationCap));
  const Permutation id(n);
  for (std::uint64_t bits = 0; bits < (1ULL << n); ++bits)
    for (unsigned b = 0; b < 2; ++b) visit({SignVector(bits), Z2(b), id});
}

void for_each_gn_element(std::size_t n, const std::function<void(const ExtElement&)>& visit) {
  for_each_signed_perm(n, [&](const SignedPerm& g) {
    visit(lift(g));
    visit({g.signs(), Z2(1), g.perm()});
  });
}

}  // namespace hyperoct

#include "hyperoct/signed_perm.hpp"

#include <string>

#include "hyperoct/error.hpp"

namespace hyperoct {

SignVector permute(const Permutation& sigma, SignVector v) {
  std::uint64_t out = 0;
  for (std::uint64_t bits = v.bits(); bits != 0; bits &= bits - 1) {
    const auto i = static_cast<std::size_t>(std::countr_zero(bits));
    out |= 1ULL << sigma(i);
  }
  return SignVector(out);
}

SignedPerm::SignedPerm(SignVector signs, Permutation perm)
    : signs_(signs), perm_(std::move(perm)) {
  if ((signs_.bits() & ~SignVector::ones(perm_.degree()).bits()) != 0)
    throw DegreeError("sign vector longer than degree " + std::to_string(perm_.degree()));
}

SignedPerm bn_mul(const SignedPerm& g, const SignedPerm& h) {
  if (g.degree() != h.degree())
    throw DegreeError("degree mismatch: " + std::to_string(g.degree()) + " vs " +
                      std::to_string(h.degree()));
  return {g.signs() + permute(g.perm(), h.signs()), g.perm() * h.perm()};
}

SignedPerm inverse(const SignedPerm& g) {
  Permutation inv = g.perm().inverse();
  const SignVector signs = permute(inv, g.signs());
  return {signs, std::move(inv)};
}

SignedPerm conjugate(const SignedPerm& g, const SignedPerm& h) {
  return g * h * inverse(g);
}

SignedPerm power(const SignedPerm& g, std::size_t k) {
  SignedPerm result(g.degree());
  for (std::size_t i = 0; i < k; ++i) result = result * g;
  return result;
}

bool is_commuting(const SignedPerm& g, const SignedPerm& h) {
  return g * h == h * g;
}

void for_each_signed_perm(std::size_t n, const std::function<void(const SignedPerm&)>& visit) {
  for_each_permutation(n, [&](const Permutation& p) {
    for (std::uint64_t bits = 0; bits < (1ULL << n); ++bits) visit({SignVector(bits), p});
  });
}

}  // namespace hyperoct

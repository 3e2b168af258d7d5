#include "hyperoct/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "hyperoct/error.hpp"

namespace hyperoct {

void check_degree(std::size_t n) {
  if (n == 0 || n > kMaxDegree)
    throw DegreeError("degree " + std::to_string(n) + " outside 1.." +
                      std::to_string(kMaxDegree));
}

Permutation::Permutation(std::size_t n) {
  check_degree(n);
  degree_ = static_cast<std::uint8_t>(n);
  std::iota(image_.begin(), image_.end(), std::uint8_t{0});
}

Permutation Permutation::from_images(std::span<const std::size_t> images) {
  Permutation p(images.size());
  std::uint64_t seen = 0;
  for (std::size_t i = 0; i < images.size(); ++i) {
    const std::size_t j = images[i];
    if (j >= images.size() || ((seen >> j) & 1U))
      throw std::invalid_argument("image table is not a bijection");
    seen |= 1ULL << j;
    p.image_[i] = static_cast<std::uint8_t>(j);
  }
  return p;
}

Permutation Permutation::from_cycles(std::size_t n,
                                     const std::vector<std::vector<std::size_t>>& cycles) {
  Permutation p(n);
  std::uint64_t seen = 0;
  for (const auto& cycle : cycles) {
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      const std::size_t i = cycle[k];
      if (i >= n) throw std::invalid_argument("cycle point out of range");
      if ((seen >> i) & 1U) throw std::invalid_argument("cycles are not disjoint");
      seen |= 1ULL << i;
      p.image_[i] = static_cast<std::uint8_t>(cycle[(k + 1) % cycle.size()]);
    }
  }
  return p;
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < degree_; ++i)
    if (image_[i] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  Permutation r(degree_);
  for (std::size_t i = 0; i < degree_; ++i) r.image_[image_[i]] = static_cast<std::uint8_t>(i);
  return r;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree())
    throw DegreeError("degree mismatch: " + std::to_string(p.degree()) + " vs " +
                      std::to_string(q.degree()));
  Permutation r(p.degree());
  for (std::size_t i = 0; i < p.degree(); ++i) r.image_[i] = p.image_[q.image_[i]];
  return r;
}

std::vector<std::size_t> CycleDecomposition::lengths() const {
  std::vector<std::size_t> out;
  out.reserve(cycles.size());
  for (const auto& c : cycles) out.push_back(c.size());
  return out;
}

CycleDecomposition cycle_decomposition(const Permutation& p) {
  CycleDecomposition d;
  const std::size_t n = p.degree();
  d.owner.assign(n, n);
  // Scanning points in increasing order makes every cycle start at its
  // smallest point and emits cycles sorted by that point.
  for (std::size_t start = 0; start < n; ++start) {
    if (d.owner[start] != n) continue;
    std::vector<std::size_t> cycle;
    for (std::size_t i = start; d.owner[i] == n; i = p(i)) {
      d.owner[i] = d.cycles.size();
      cycle.push_back(i);
    }
    d.cycles.push_back(std::move(cycle));
  }
  return d;
}

Permutation from_decomposition(std::size_t n, const CycleDecomposition& d) {
  return Permutation::from_cycles(n, d.cycles);
}

void for_each_permutation(std::size_t n, const std::function<void(const Permutation&)>& visit) {
  check_degree(n);
  if (n > kEnumerationCap)
    throw DegreeError("enumeration is capped at degree " + std::to_string(kEnumerationCap));
  std::vector<std::size_t> images(n);
  std::iota(images.begin(), images.end(), std::size_t{0});
  do {
    visit(Permutation::from_images(images));
  } while (std::next_permutation(images.begin(), images.end()));
}

}  // namespace hyperoct

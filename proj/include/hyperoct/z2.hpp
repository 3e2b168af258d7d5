#ifndef HYPEROCT_Z2_HPP
#define HYPEROCT_Z2_HPP

#include <cstdint>
#include <ostream>

namespace hyperoct {

/// An element of Z/2, written additively.
class Z2 {
 public:
  constexpr Z2() noexcept = default;
  constexpr explicit Z2(std::uint64_t x) noexcept : bit_(x & 1U) {}

  constexpr int value() const noexcept { return bit_; }
  constexpr explicit operator bool() const noexcept { return bit_ != 0; }

  friend constexpr Z2 operator+(Z2 a, Z2 b) noexcept { return Z2(a.bit_ ^ b.bit_); }
  friend constexpr Z2 operator*(Z2 a, Z2 b) noexcept { return Z2(a.bit_ & b.bit_); }
  constexpr Z2& operator+=(Z2 o) noexcept { return *this = *this + o; }
  friend constexpr bool operator==(Z2, Z2) noexcept = default;

  friend std::ostream& operator<<(std::ostream& os, Z2 z) { return os << z.value(); }

 private:
  std::uint8_t bit_ = 0;
};

}  // namespace hyperoct

#endif  // HYPEROCT_Z2_HPP

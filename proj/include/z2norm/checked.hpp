#pragma once

#include <cstdint>
#include <limits>

#include "z2norm/error.hpp"

namespace z2norm {

using Int = std::int64_t;

// Overflow-checked 64-bit arithmetic. Every operation either returns the exact
// result or throws OverflowError; nothing wraps.
namespace checked {

inline Int add(Int x, Int y) {
  Int r;
  if (__builtin_add_overflow(x, y, &r)) throw OverflowError("integer overflow in addition");
  return r;
}

inline Int sub(Int x, Int y) {
  Int r;
  if (__builtin_sub_overflow(x, y, &r)) throw OverflowError("integer overflow in subtraction");
  return r;
}

inline Int mul(Int x, Int y) {
  Int r;
  if (__builtin_mul_overflow(x, y, &r)) throw OverflowError("integer overflow in multiplication");
  return r;
}

inline Int neg(Int x) {
  if (x == std::numeric_limits<Int>::min()) throw OverflowError("integer overflow in negation");
  return -x;
}

inline Int abs(Int x) { return x < 0 ? neg(x) : x; }

// x*y - z*w, the shape of every determinant and intersection number here.
inline Int cross(Int x, Int y, Int z, Int w) { return sub(mul(x, y), mul(z, w)); }

}  // namespace checked

/// Non-negative remainder; mod2(-3) == 1.
constexpr int mod2(Int x) noexcept { return static_cast<int>(x & 1); }

constexpr Int floor_mod(Int x, Int m) noexcept {
  Int r = x % m;
  return r < 0 ? r + m : r;
}

}  // namespace z2norm

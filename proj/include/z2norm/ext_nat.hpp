#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

#include "z2norm/error.hpp"

namespace z2norm {

/// A natural number or infinity. Carries distances, Bredon-Wood values,
/// translation lengths and minimal genera. Infinity compares above every
/// finite value; arithmetic is only defined on finite values.
class ExtNat {
 public:
  constexpr ExtNat() noexcept = default;
  constexpr ExtNat(std::uint64_t v) noexcept : value_(v) {}  // NOLINT(google-explicit-constructor)

  static constexpr ExtNat infinity() noexcept {
    ExtNat n;
    n.infinite_ = true;
    return n;
  }

  constexpr bool is_finite() const noexcept { return !infinite_; }
  constexpr bool is_infinite() const noexcept { return infinite_; }

  std::uint64_t value() const {
    if (infinite_) throw DomainError("value() of infinite ExtNat");
    return value_;
  }

  constexpr std::strong_ordering operator<=>(const ExtNat& o) const noexcept {
    if (infinite_ != o.infinite_) return infinite_ ? std::strong_ordering::greater : std::strong_ordering::less;
    if (infinite_) return std::strong_ordering::equal;
    return value_ <=> o.value_;
  }
  constexpr bool operator==(const ExtNat& o) const noexcept { return (*this <=> o) == 0; }

  ExtNat operator+(const ExtNat& o) const {
    if (infinite_ || o.infinite_) throw DomainError("addition with infinity is undefined");
    return ExtNat(value_ + o.value_);
  }

  ExtNat operator-(const ExtNat& o) const {
    if (infinite_ || o.infinite_) throw DomainError("subtraction with infinity is undefined");
    if (o.value_ > value_) throw DomainError("ExtNat subtraction would go negative");
    return ExtNat(value_ - o.value_);
  }

  /// "inf" for infinity, decimal otherwise.
  std::string to_string() const { return infinite_ ? "inf" : std::to_string(value_); }

 private:
  std::uint64_t value_ = 0;
  bool infinite_ = false;
};

inline std::ostream& operator<<(std::ostream& os, const ExtNat& n) { return os << n.to_string(); }

}  // namespace z2norm

#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

#include "z2norm/checked.hpp"

namespace z2norm {

/// Isotopy class of an essential simple closed curve on the torus, written
/// p/q in the fixed basis (lambda, mu). Always reduced, with q > 0 or the
/// single infinite slope 1/0.
class Slope {
 public:
  /// Normalizes the sign. Throws DomainError on (0, 0) or gcd(|p|, |q|) != 1.
  static Slope make(Int p, Int q);

  /// Parses "p/q". ParseError on malformed text, DomainError when not reduced.
  static Slope parse(std::string_view text);

  static Slope infinity() { return Slope(1, 0); }
  static Slope zero() { return Slope(0, 1); }

  Int p() const noexcept { return p_; }
  Int q() const noexcept { return q_; }

  std::string to_string() const;

  bool operator==(const Slope&) const = default;
  auto operator<=>(const Slope&) const = default;

 private:
  Slope(Int p, Int q) : p_(p), q_(q) {}
  Int p_;
  Int q_;
};

inline std::ostream& operator<<(std::ostream& os, const Slope& s) { return os << s.to_string(); }

/// The three components of the intersection-number-2 curve complex,
/// keyed by (p mod 2)/(q mod 2).
enum class ParityClass { Inf, Zero, One };  // 1/0, 0/1, 1/1

inline constexpr std::array<ParityClass, 3> kParityClasses = {ParityClass::Inf, ParityClass::Zero,
                                                              ParityClass::One};

ParityClass parity_of(const Slope& s);
ParityClass parity_from_bits(int j, int k);
std::pair<int, int> parity_bits(ParityClass c);  // (j, k) = (p mod 2, q mod 2)
std::string to_string(ParityClass c);

/// 1/0, 0/1 or 1/1.
Slope base_vertex(ParityClass c);

}  // namespace z2norm

template <>
struct std::hash<z2norm::Slope> {
  std::size_t operator()(const z2norm::Slope& s) const noexcept {
    auto h = static_cast<std::size_t>(s.p()) * 0x9E3779B97F4A7C15ULL;
    return h ^ (static_cast<std::size_t>(s.q()) + 0x7F4A7C159E3779B9ULL + (h << 6) + (h >> 2));
  }
};

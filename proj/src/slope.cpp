#include "z2norm/slope.hpp"

#include <charconv>

#include "z2norm/arith.hpp"

namespace z2norm {

Slope Slope::make(Int p, Int q) {
  if (p == 0 && q == 0) throw DomainError("0/0 is not a slope");
  if (gcd(p, q) != 1)
    throw DomainError("slope " + std::to_string(p) + "/" + std::to_string(q) + " is not reduced");
  if (q < 0 || (q == 0 && p < 0)) return Slope(checked::neg(p), checked::neg(q));
  return Slope(p, q);
}

namespace {

Int parse_int(std::string_view text, std::string_view whole) {
  Int v = 0;
  const char* first = text.data();
  const char* last = first + text.size();
  if (!text.empty() && text.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (text.empty() || ec != std::errc() || ptr != last) throw ParseError("bad integer in slope", std::string(whole));
  return v;
}

}  // namespace

Slope Slope::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) throw ParseError("slope must look like p/q", std::string(text));
  return make(parse_int(text.substr(0, slash), text), parse_int(text.substr(slash + 1), text));
}

std::string Slope::to_string() const { return std::to_string(p_) + "/" + std::to_string(q_); }

ParityClass parity_from_bits(int j, int k) {
  if (j == 1 && k == 0) return ParityClass::Inf;
  if (j == 0 && k == 1) return ParityClass::Zero;
  if (j == 1 && k == 1) return ParityClass::One;
  throw DomainError("(0, 0) is not a parity class");
}

ParityClass parity_of(const Slope& s) { return parity_from_bits(mod2(s.p()), mod2(s.q())); }

std::pair<int, int> parity_bits(ParityClass c) {
  switch (c) {
    case ParityClass::Inf: return {1, 0};
    case ParityClass::Zero: return {0, 1};
    case ParityClass::One: return {1, 1};
  }
  return {0, 0};
}

std::string to_string(ParityClass c) {
  const auto [j, k] = parity_bits(c);
  return std::to_string(j) + "/" + std::to_string(k);
}

Slope base_vertex(ParityClass c) {
  const auto [j, k] = parity_bits(c);
  return Slope::make(j, k);
}

}  // namespace z2norm

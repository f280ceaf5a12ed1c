#include "z2norm/arith.hpp"

#include <numeric>

namespace z2norm {

GcdResult ext_gcd(Int p, Int q) {
  if (p == 0 && q == 0) throw DomainError("undefined gcd");
  Int old_r = p, r = q;
  Int old_x = 1, x = 0;
  Int old_y = 0, y = 1;
  while (r != 0) {
    const Int quot = old_r / r;
    old_r = checked::sub(old_r, checked::mul(quot, r));
    std::swap(old_r, r);
    old_x = checked::sub(old_x, checked::mul(quot, x));
    std::swap(old_x, x);
    old_y = checked::sub(old_y, checked::mul(quot, y));
    std::swap(old_y, y);
  }
  if (old_r < 0) return {checked::neg(old_r), checked::neg(old_x), checked::neg(old_y)};
  return {old_r, old_x, old_y};
}

Int gcd(Int p, Int q) { return std::gcd(checked::abs(p), checked::abs(q)); }

std::pair<Int, Int> ContinuedFraction::evaluate() const {
  if (terms.empty()) throw DomainError("empty continued fraction");
  // Fold from the tail: x = a_i + 1/x.
  Int num = terms.back(), den = 1;
  for (auto it = terms.rbegin() + 1; it != terms.rend(); ++it) {
    const Int next_num = checked::add(checked::mul(*it, num), den);
    den = num;
    num = next_num;
  }
  return {num, den};
}

ContinuedFraction continued_fraction(Int P, Int Q) {
  if (P < 0 || Q < 1) throw DomainError("continued fraction needs P >= 0 and Q >= 1");
  if (gcd(P, Q) != 1) throw DomainError("continued fraction of non-reduced " + std::to_string(P) + "/" +
                                        std::to_string(Q));
  ContinuedFraction cf;
  while (Q != 0) {
    cf.terms.push_back(P / Q);
    P %= Q;
    std::swap(P, Q);
  }
  return cf;
}

ExtNat bredon_wood(Int p, Int q) {
  if (p == 0 && q == 0) throw DomainError("N(0, 0) is undefined");
  if (gcd(p, q) != 1)
    throw DomainError("N(p, q) needs coprime arguments, got (" + std::to_string(p) + ", " + std::to_string(q) + ")");
  if (mod2(p) == 1) return ExtNat::infinity();
  if (p == 0) return 0;

  const auto a = continued_fraction(checked::abs(p), checked::abs(q)).terms;
  std::vector<Int> b(a.size());
  b[0] = a[0];
  Int prefix = b[0];
  for (std::size_t i = 1; i < a.size(); ++i) {
    const bool take = b[i - 1] != a[i - 1] || mod2(prefix) == 1;
    b[i] = take ? a[i] : 0;
    prefix = checked::add(prefix, b[i]);
  }
  if (mod2(prefix) != 0) throw std::logic_error("Bredon-Wood sum is odd for p=" + std::to_string(p));
  return static_cast<std::uint64_t>(prefix / 2);
}

}  // namespace z2norm

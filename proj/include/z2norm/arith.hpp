#pragma once

#include <utility>
#include <vector>

#include "z2norm/checked.hpp"
#include "z2norm/ext_nat.hpp"

namespace z2norm {

struct GcdResult {
  Int g;  // gcd(|p|, |q|) > 0
  Int x;
  Int y;  // p*x + q*y == g
};

/// Extended Euclid. Throws DomainError("undefined gcd") on (0, 0).
GcdResult ext_gcd(Int p, Int q);

/// gcd with the convention gcd(k, 0) = |k|.
Int gcd(Int p, Int q);

inline bool coprime(Int p, Int q) { return (p != 0 || q != 0) && gcd(p, q) == 1; }

/// Canonical regular continued fraction [a_0; a_1, ..., a_n]: a_0 >= 0,
/// middle terms >= 1, last term >= 2 whenever n >= 1.
struct ContinuedFraction {
  std::vector<Int> terms;

  /// Folds the tower back into a reduced (numerator, denominator).
  std::pair<Int, Int> evaluate() const;
};

/// Expansion of P/Q for P >= 0, Q >= 1, gcd(P, Q) == 1.
ContinuedFraction continued_fraction(Int P, Int Q);

/// Bredon-Wood invariant N(p, q): minimal genus of a non-orientable surface
/// in L(p, q), equivalently the tree distance from 0/1 to p/q.
///
/// Infinity when p is odd, 0 when p == 0, otherwise half the sum of the
/// b_i derived from the continued fraction of |p|/|q|.
ExtNat bredon_wood(Int p, Int q);

}  // namespace z2norm

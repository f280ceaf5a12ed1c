#pragma once

#include <ostream>
#include <string>
#include <string_view>

#include "z2norm/checked.hpp"

namespace z2norm {

/// A 2x2 integer matrix with determinant +1 or -1, laid out as
///
///     ( a  c )
///     ( b  d )
///
/// so that the first column (a, b) is the image of lambda and the second
/// column (c, d) is the image of mu. Text form is "a,c;b,d".
class GL2Matrix {
 public:
  /// Throws DomainError naming the determinant if it is not +-1.
  static GL2Matrix from_rows(Int a, Int c, Int b, Int d);
  static GL2Matrix parse(std::string_view text);
  static GL2Matrix identity() { return GL2Matrix(1, 0, 0, 1, 1); }

  Int a() const noexcept { return a_; }
  Int b() const noexcept { return b_; }
  Int c() const noexcept { return c_; }
  Int d() const noexcept { return d_; }

  Int det() const noexcept { return det_; }  // +-1 by construction
  Int trace() const { return checked::add(a_, d_); }

  GL2Matrix operator*(const GL2Matrix& o) const;
  GL2Matrix inverse() const;
  GL2Matrix operator-() const;
  GL2Matrix pow(unsigned k) const;

  /// Entries reduced into {0, 1}, row-major (a, c, b, d).
  struct Mod2 {
    int a, c, b, d;
    bool operator==(const Mod2&) const = default;
  };
  Mod2 mod2() const noexcept;

  bool operator==(const GL2Matrix&) const = default;

  std::string to_string() const;

 private:
  GL2Matrix(Int a, Int c, Int b, Int d, Int det) : a_(a), c_(c), b_(b), d_(d), det_(det) {}
  Int a_, c_, b_, d_;
  Int det_;
};

inline std::ostream& operator<<(std::ostream& os, const GL2Matrix& m) { return os << m.to_string(); }

}  // namespace z2norm

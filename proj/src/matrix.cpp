#include "z2norm/matrix.hpp"

#include <charconv>
#include <vector>

namespace z2norm {

GL2Matrix GL2Matrix::from_rows(Int a, Int c, Int b, Int d) {
  const Int det = checked::cross(a, d, b, c);
  if (det != 1 && det != -1)
    throw DomainError("matrix " + std::to_string(a) + "," + std::to_string(c) + ";" + std::to_string(b) + "," +
                      std::to_string(d) + " has determinant " + std::to_string(det) + ", expected +1 or -1");
  return GL2Matrix(a, c, b, d, det);
}

GL2Matrix GL2Matrix::parse(std::string_view text) {
  std::vector<Int> entries;
  std::size_t start = 0;
  int separators_seen = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    const bool end = i == text.size();
    if (!end && text[i] != ',' && text[i] != ';') continue;
    if (!end) {
      const bool want_semicolon = entries.size() == 1;
      if ((text[i] == ';') != want_semicolon || separators_seen >= 3) throw ParseError("matrix must look like a,c;b,d", std::string(text));
      ++separators_seen;
    }
    auto field = text.substr(start, i - start);
    while (!field.empty() && field.front() == ' ') field.remove_prefix(1);
    while (!field.empty() && field.back() == ' ') field.remove_suffix(1);
    if (!field.empty() && field.front() == '+') field.remove_prefix(1);
    Int v = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
    if (field.empty() || ec != std::errc() || ptr != field.data() + field.size())
      throw ParseError("bad matrix entry", std::string(text.substr(start, i - start)));
    entries.push_back(v);
    start = i + 1;
  }
  if (entries.size() != 4) throw ParseError("matrix must look like a,c;b,d", std::string(text));
  return from_rows(entries[0], entries[1], entries[2], entries[3]);
}

GL2Matrix GL2Matrix::operator*(const GL2Matrix& o) const {
  using checked::add;
  using checked::mul;
  return GL2Matrix(add(mul(a_, o.a_), mul(c_, o.b_)), add(mul(a_, o.c_), mul(c_, o.d_)),
                   add(mul(b_, o.a_), mul(d_, o.b_)), add(mul(b_, o.c_), mul(d_, o.d_)), det_ * o.det_);
}

GL2Matrix GL2Matrix::inverse() const {
  // adj(A) / det(A) with det = +-1
  using checked::mul;
  using checked::neg;
  return GL2Matrix(mul(det_, d_), mul(det_, neg(c_)), mul(det_, neg(b_)), mul(det_, a_), det_);
}

GL2Matrix GL2Matrix::operator-() const {
  return GL2Matrix(checked::neg(a_), checked::neg(c_), checked::neg(b_), checked::neg(d_), det_);
}

GL2Matrix GL2Matrix::pow(unsigned k) const {
  GL2Matrix result = identity();
  GL2Matrix base = *this;
  while (k > 0) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k > 0) base = base * base;
  }
  return result;
}

GL2Matrix::Mod2 GL2Matrix::mod2() const noexcept {
  return {z2norm::mod2(a_), z2norm::mod2(c_), z2norm::mod2(b_), z2norm::mod2(d_)};
}

std::string GL2Matrix::to_string() const {
  return std::to_string(a_) + "," + std::to_string(c_) + ";" + std::to_string(b_) + "," + std::to_string(d_);
}

}  // namespace z2norm

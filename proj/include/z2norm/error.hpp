#pragma once

#include <stdexcept>
#include <string>

namespace z2norm {

/// Input violates a mathematical precondition (non-coprime slope, |det| != 1, ...).
class DomainError : public std::invalid_argument {
 public:
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

/// Malformed text input. `token()` is the offending fragment.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::string token)
      : std::invalid_argument(what + ": '" + token + "'"), token_(std::move(token)) {}

  const std::string& token() const noexcept { return token_; }

 private:
  std::string token_;
};

/// A fixed-width intermediate would have wrapped.
class OverflowError : public std::overflow_error {
 public:
  explicit OverflowError(const std::string& what) : std::overflow_error(what) {}
};

}  // namespace z2norm

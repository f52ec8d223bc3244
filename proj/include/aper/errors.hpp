#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace aper {

/// Syntax error in a term or monoid file, with a 0-based input position.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string msg, std::size_t position)
      : std::runtime_error(std::move(msg) + " (at position " +
                           std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A configured resource cap was exceeded; fail loudly rather than thrash.
class LimitError : public std::runtime_error {
 public:
  explicit LimitError(const std::string& msg) : std::runtime_error(msg) {}
};

/// A cross-check refuted a result the canonicalizer claimed. This signals a
/// bug in the normal-form engine, never a property of the input.
class InconsistencyError : public std::logic_error {
 public:
  explicit InconsistencyError(const std::string& msg)
      : std::logic_error(msg) {}
};

}  // namespace aper

#pragma once

#include <stdexcept>
#include <string>

namespace exchange {

/// A computation would exceed the enumeration or search limits.
class ScaleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed family file.
class FormatError : public std::runtime_error {
 public:
  FormatError(const std::string& what, int line) : std::runtime_error(what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

}  // namespace exchange

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace skewcat {

/// Lexical or syntactic error with the byte offset where it was detected.
class ParseError : public std::runtime_error {
public:
  ParseError(std::string message, std::size_t offset)
      : std::runtime_error("parse error at offset " + std::to_string(offset) +
                           ": " + message),
        offset_(offset) {}
  std::size_t offset() const { return offset_; }

private:
  std::size_t offset_;
};

/// A map expression whose composites do not compose.
class TypingError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A proof tree rejected by the kernel: malformed child conclusions,
/// ill-typed sides, or a non-parallel conclusion.
class KernelError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace skewcat

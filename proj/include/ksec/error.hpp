#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ksec {

enum class ErrorCode {
  kInvalidGraph,
  kNotATree,
  kNotAForest,
  kNotAPartition,
  kPathNotInTree,
  kMOutOfRange,
  kKOutOfRange,
  kKNotPowerOfTwo,
  kSizesDontSum,
  kRedundantDecomposition,
  kInvalidDecomposition,
  kWidthTooLarge,
  kTooLarge,
  kResourceLimit,
  kBadParameters,
  kParse,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Raised by the .gr / .td readers. `line` is 1-based; 0 means end of input.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(ErrorCode::kParse, "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// A postcondition the library promises failed. Never expected; surfaced by
// the CLI as exit code 3.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace ksec

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace iru {

enum class ErrorKind {
  kInvalidArgument,
  kDuplicateUtterance,
  kDanglingAntecedent,
  kUnknownField,
  kDuplicateField,
  kMissingField,
  kBadValue,
  kBadPropositionSyntax,
  kEmptyTranscript,
  kUnknownProposition,
  kOrderingViolation,
  kDefeatRejected,
  kConflictDetected,
  kIo,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Base error for the library. `line` is 1-based, 0 when not tied to input text.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message, std::size_t line = 0);

  ErrorKind kind() const noexcept { return kind_; }
  std::size_t line() const noexcept { return line_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorKind kind_;
  std::size_t line_;
  std::string detail_;
};

struct Diagnostic {
  ErrorKind kind;
  std::size_t line;
  std::string message;

  bool operator==(const Diagnostic&) const = default;
};

/// Raised by the transcript parser; carries every problem found, in line order.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(std::vector<Diagnostic> diagnostics);

  const std::vector<Diagnostic>& diagnostics() const noexcept { return diagnostics_; }

 private:
  std::vector<Diagnostic> diagnostics_;
};

std::string format_diagnostic(const Diagnostic& d);

}  // namespace iru

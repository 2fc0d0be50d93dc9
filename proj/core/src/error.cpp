#include "iru/error.hpp"

#include <sstream>

namespace iru {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::kInvalidArgument: return "InvalidArgument";
    case ErrorKind::kDuplicateUtterance: return "DuplicateUtterance";
    case ErrorKind::kDanglingAntecedent: return "DanglingAntecedent";
    case ErrorKind::kUnknownField: return "UnknownField";
    case ErrorKind::kDuplicateField: return "DuplicateField";
    case ErrorKind::kMissingField: return "MissingField";
    case ErrorKind::kBadValue: return "BadValue";
    case ErrorKind::kBadPropositionSyntax: return "BadPropositionSyntax";
    case ErrorKind::kEmptyTranscript: return "EmptyTranscript";
    case ErrorKind::kUnknownProposition: return "UnknownProposition";
    case ErrorKind::kOrderingViolation: return "OrderingViolation";
    case ErrorKind::kDefeatRejected: return "DefeatRejected";
    case ErrorKind::kConflictDetected: return "ConflictDetected";
    case ErrorKind::kIo: return "Io";
  }
  return "Unknown";
}

namespace {
std::string compose(ErrorKind kind, const std::string& message, std::size_t line) {
  std::ostringstream os;
  if (line > 0) os << "line " << line << ": ";
  os << to_string(kind) << ": " << message;
  return os.str();
}

std::string summarize(const std::vector<Diagnostic>& diagnostics) {
  std::ostringstream os;
  for (std::size_t i = 0; i < diagnostics.size(); ++i) {
    if (i > 0) os << '\n';
    os << format_diagnostic(diagnostics[i]);
  }
  return os.str();
}
}  // namespace

Error::Error(ErrorKind kind, const std::string& message, std::size_t line)
    : std::runtime_error(compose(kind, message, line)), kind_(kind), line_(line), detail_(message) {}

ParseError::ParseError(std::vector<Diagnostic> diagnostics)
    : std::runtime_error(summarize(diagnostics)), diagnostics_(std::move(diagnostics)) {}

std::string format_diagnostic(const Diagnostic& d) {
  return compose(d.kind, d.message, d.line);
}

}  // namespace iru

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace metalogic {

// Failure codes raised as exceptions. Structural problems found by
// validation are reported as data (see Violation), not through these.
enum class Errc {
  InvalidGraph,
  PassageMismatch,
  SentenceMismatch,
  SchemaViolation,
  LengthMismatch,
  UnknownLabel,
  EmptyInput,
  MissingSpans,
  VariableAlignmentFailure,
  ParseMismatch,
  MalformedRow,
  MultipleRoots,
  OverlappingLexicon,
  EmptyCorpus,
  Io,
  PairingError,
  Syntax,
};

std::string_view code_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace metalogic

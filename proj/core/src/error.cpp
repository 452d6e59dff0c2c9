#include "metalogic/error.hpp"

namespace metalogic {

std::string_view code_name(Errc code) {
  switch (code) {
    case Errc::InvalidGraph: return "INVALID_GRAPH";
    case Errc::PassageMismatch: return "PASSAGE_MISMATCH";
    case Errc::SentenceMismatch: return "SENTENCE_MISMATCH";
    case Errc::SchemaViolation: return "SCHEMA_VIOLATION";
    case Errc::LengthMismatch: return "LENGTH_MISMATCH";
    case Errc::UnknownLabel: return "UNKNOWN_LABEL";
    case Errc::EmptyInput: return "EMPTY_INPUT";
    case Errc::MissingSpans: return "MISSING_SPANS";
    case Errc::VariableAlignmentFailure: return "VARIABLE_ALIGNMENT_FAILURE";
    case Errc::ParseMismatch: return "PARSE_MISMATCH";
    case Errc::MalformedRow: return "MALFORMED_ROW";
    case Errc::MultipleRoots: return "MULTIPLE_ROOTS";
    case Errc::OverlappingLexicon: return "OVERLAPPING_LEXICON";
    case Errc::EmptyCorpus: return "EMPTY_CORPUS";
    case Errc::Io: return "IO_ERROR";
    case Errc::PairingError: return "PAIRING_ERROR";
    case Errc::Syntax: return "SYNTAX";
  }
  return "UNKNOWN";
}

Error::Error(Errc code, const std::string& message)
    : std::runtime_error(std::string(code_name(code)) + ": " + message), code_(code) {}

}  // namespace metalogic

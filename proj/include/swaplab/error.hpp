#pragma once

#include <stdexcept>
#include <string>

namespace swaplab {

// Error taxonomy shared by every module. Codes mirror the failure modes of
// the public operations; messages carry the offending values.
enum class Errc {
  index_out_of_range,
  invalid_range,
  invalid_interval,
  invalid_length,
  invalid_parameter,
  invalid_blocks,
  unknown_symbol,
  unknown_fixture,
  alphabet_mismatch,
  length_mismatch,
  parse_error,
  not_gnf,
  not_gnf_normal,
  empty_language,
  empty_string_in_language,
  budget_exceeded,
  path_budget_exceeded,
  no_assignment,
  not_in_language,
  path_mismatch,
  precondition_violated,
  verification_failed,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::index_out_of_range: return "IndexOutOfRange";
    case Errc::invalid_range: return "InvalidRange";
    case Errc::invalid_interval: return "InvalidInterval";
    case Errc::invalid_length: return "InvalidLength";
    case Errc::invalid_parameter: return "InvalidParameter";
    case Errc::invalid_blocks: return "InvalidBlocks";
    case Errc::unknown_symbol: return "UnknownSymbol";
    case Errc::unknown_fixture: return "UnknownFixture";
    case Errc::alphabet_mismatch: return "AlphabetMismatch";
    case Errc::length_mismatch: return "LengthMismatch";
    case Errc::parse_error: return "ParseError";
    case Errc::not_gnf: return "NotGnf";
    case Errc::not_gnf_normal: return "NotGnfNormal";
    case Errc::empty_language: return "EmptyLanguage";
    case Errc::empty_string_in_language: return "EmptyStringInLanguage";
    case Errc::budget_exceeded: return "BudgetExceeded";
    case Errc::path_budget_exceeded: return "PathBudgetExceeded";
    case Errc::no_assignment: return "NoAssignment";
    case Errc::not_in_language: return "NotInLanguage";
    case Errc::path_mismatch: return "PathMismatch";
    case Errc::precondition_violated: return "PreconditionViolated";
    case Errc::verification_failed: return "VerificationFailed";
  }
  return "UnknownError";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) {
  throw Error(code, what);
}

inline void require(bool ok, Errc code, const std::string& what) {
  if (!ok) fail(code, what);
}

}  // namespace swaplab

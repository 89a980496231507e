#pragma once

#include <stdexcept>
#include <string>

namespace qlf {

enum class ErrorCode {
    ParseError,
    SemanticError,
    DivisionByZero,
    HypothesisViolated,
    InputNotPIndependent,
    NormDegreeCollapsed,
    CaseNotCovered,
    EmptyNormSet,
    ZeroForm,
    ZeroArgument,
    ZeroSlot,
    DegreeMismatch,
    WrongCharacteristic,
    FieldMismatch,
    CrosscheckFailed,
    Internal,
};

const char* error_code_name(ErrorCode code);

/// Library-wide error type. `code()` is stable and is what the CLI maps
/// to exit codes.
class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const { return code_; }

  private:
    ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& msg) {
    throw Error(code, msg);
}

} // namespace qlf

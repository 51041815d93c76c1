#pragma once

#include <stdexcept>
#include <string>

namespace chaincond {

enum class ErrorCode {
    KindMismatch,
    EqualBranches,
    EntryOutOfRange,
    BadArity,
    EmptyCondition,
    NotAClique,
    NotAnAntiClique,
    DepthTooSmall,
    TooLarge,
    IndexOutOfRange,
    InvalidConfiguration,
    NotAPartialOrder,
    ConfigError,
    UnknownSelector,
};

const char* error_code_name(ErrorCode code);

/// Domain error carrying a stable code; `what()` is "CodeName: detail".
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& detail)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + detail), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

} // namespace chaincond

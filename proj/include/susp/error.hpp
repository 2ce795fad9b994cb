#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace susp {

enum class ErrorCode {
    RingMismatch,
    DivisionByZero,
    UnknownVariable,
    MissingAssignment,
    ZeroInput,
    UnitInput,
    ResourceLimit,
    ZeroF,
    UnitF,
    TowerMismatch,
    NotUfd,
    Unsupported,
    ConsistencyError,
    SyntaxError,
    Precondition,
    InvalidArgument,
};

std::string_view error_code_name(ErrorCode code);

// Every failure raised by the library carries a machine-readable code; the CLI
// maps it to exit status 2 and prints error_code_name().
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

class SyntaxError : public Error {
public:
    SyntaxError(const std::string& message, int line, int column)
        : Error(ErrorCode::SyntaxError,
                message + " at line " + std::to_string(line) + ", column " + std::to_string(column)),
          line_(line), column_(column) {}

    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

private:
    int line_;
    int column_;
};

}  // namespace susp

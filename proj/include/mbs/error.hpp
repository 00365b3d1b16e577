#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mbs {

enum class ErrorCode {
    EmptySectorBoundary,
    DanglingBranchReference,
    ZeroDegree,
    IsolatedBranch,
    DuplicateIdentifier,
    NegativeGenus,
    UnknownBranch,
    UnknownSector,
    NotRegular,
    Disconnected,
    NonorientableSector,
    NonorientableBoundary,
    InternalMismatch,
    OddComponentChi,
    NotAnAnnulus,
    DegreeNotOne,
    SameBranch,
    ResultCapExceeded,
    SearchBudgetExceeded,
    DegreeTooSmall,
    EmptyDegrees,
    IsolatedVertex,
    InvalidArgument,
    SyntaxError,
    SemanticError,
};

std::string_view error_code_name(ErrorCode code);

/// Every failure raised by the library. The code is stable and mirrored by the C API status values.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

/// Raised by the text parser; carries a 1-based position.
class ParseError : public Error {
public:
    ParseError(ErrorCode code, const std::string& message, std::size_t line, std::size_t column)
        : Error(code, "line " + std::to_string(line) + ", column " + std::to_string(column) +
                          ": " + message),
          line_(line),
          column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

}  // namespace mbs

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bipdom {

enum class ErrorCode {
    InvalidLabel,
    DuplicateLabel,
    UnknownEndpoint,
    UnknownVertex,
    UnknownEdge,
    SelfLoop,
    DuplicateEdge,
    EdgeAlreadyPresent,
    SyntaxError,
    ClauseArityError,
    TautologicalClause,
    VariableOutOfRange,
    PartialAssignment,
    TooFewVariables,
    IsolatedVertex,
    BudgetExceeded,
    EmptyGraph,
    UnsatisfyingAssignment,
    KindMismatch,
};

/// Stable kebab-case name, used as the machine-readable part of CLI diagnostics.
std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace bipdom

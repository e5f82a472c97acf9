#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace phom {

enum class ErrorCode {
    DuplicateEdge,
    UnknownVertex,
    UnknownLabel,
    EmptyVertexSet,
    ProbabilityOutOfRange,
    MissingProbability,
    TooManyUncertainEdges,
    TooManyEdges,
    TooManyVariables,
    UncoveredVariable,
    NotValidated,
    MalformedTree,
    NotA2WP,
    ClassMismatch,
    EmptyGraph,
    MalformedFormula,
    UnknownClass,
    Parse,
};

std::string_view error_code_name(ErrorCode code);

/// Every recoverable failure in the library is reported through this type.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace phom

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace recon {

enum class ErrorKind {
    HypothesisViolation,
    CapExceeded,
    BadChar,
    TruncatedBits,
    TrailingGarbage,
    ParseError,
    DisconnectedInput,
    MissingVertex,
    MissingEdge,
    OversizeGraph,
    KindMismatch,
    MalformedDeck,
    NotProperSubgraph,
    AmbiguousEndpoints,
    NoCandidate,
    NotACut,
    MultipleNontrivial,
    AssertionFailure,
    NonUnique,
    ConsistencyFailure,
};

std::string_view error_kind_name(ErrorKind kind) noexcept;

// Exit status used by the command line tool for an error of this kind.
int exit_code_for(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
    throw Error(kind, message);
}

}  // namespace recon

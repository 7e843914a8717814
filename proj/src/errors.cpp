#include "recon/errors.hpp"

namespace recon {

std::string_view error_kind_name(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::HypothesisViolation: return "HypothesisViolation";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::BadChar: return "BadChar";
    case ErrorKind::TruncatedBits: return "TruncatedBits";
    case ErrorKind::TrailingGarbage: return "TrailingGarbage";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::DisconnectedInput: return "DisconnectedInput";
    case ErrorKind::MissingVertex: return "MissingVertex";
    case ErrorKind::MissingEdge: return "MissingEdge";
    case ErrorKind::OversizeGraph: return "OversizeGraph";
    case ErrorKind::KindMismatch: return "KindMismatch";
    case ErrorKind::MalformedDeck: return "MalformedDeck";
    case ErrorKind::NotProperSubgraph: return "NotProperSubgraph";
    case ErrorKind::AmbiguousEndpoints: return "AmbiguousEndpoints";
    case ErrorKind::NoCandidate: return "NoCandidate";
    case ErrorKind::NotACut: return "NotACut";
    case ErrorKind::MultipleNontrivial: return "MultipleNontrivial";
    case ErrorKind::AssertionFailure: return "AssertionFailure";
    case ErrorKind::NonUnique: return "NonUnique";
    case ErrorKind::ConsistencyFailure: return "ConsistencyFailure";
    }
    return "Unknown";
}

int exit_code_for(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::HypothesisViolation:
    case ErrorKind::NotACut:
    case ErrorKind::MultipleNontrivial:
    case ErrorKind::DisconnectedInput:
        return 2;
    case ErrorKind::CapExceeded:
    case ErrorKind::OversizeGraph:
        return 3;
    case ErrorKind::BadChar:
    case ErrorKind::TruncatedBits:
    case ErrorKind::TrailingGarbage:
    case ErrorKind::ParseError:
    case ErrorKind::MalformedDeck:
    case ErrorKind::KindMismatch:
        return 4;
    default:
        return 1;
    }
}

}  // namespace recon

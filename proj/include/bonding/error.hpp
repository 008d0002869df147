#ifndef BONDING_ERROR_HPP
#define BONDING_ERROR_HPP

#include <stdexcept>
#include <string>

namespace bonding {

// Machine-readable failure categories. The string form (see code_name) is what
// the CLI prints and what the loaders report for the first violated invariant.
enum class ErrorCode {
    ArityMismatch,
    DuplicateId,
    UnknownVertex,
    UnknownEdge,
    UnknownLabel,
    LabelConflict,
    SameEdge,
    BondUndefined,
    NotBreakable,
    AlphabetOverlap,
    BondNotInjective,
    BondArity,
    BondDomain,
    BondRange,
    StartDisconnected,
    LengthMismatch,
    BoundExceeded,
    SearchAborted,
    InvalidDomino,
    NotRegular,
    NotInR,
    NotComplementary,
    InvalidGraph,
    InvalidInstance,
    Parse,
};

inline const char* code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::ArityMismatch: return "E_ARITY_MISMATCH";
        case ErrorCode::DuplicateId: return "E_DUPLICATE_ID";
        case ErrorCode::UnknownVertex: return "E_UNKNOWN_VERTEX";
        case ErrorCode::UnknownEdge: return "E_UNKNOWN_EDGE";
        case ErrorCode::UnknownLabel: return "E_UNKNOWN_LABEL";
        case ErrorCode::LabelConflict: return "E_LABEL_CONFLICT";
        case ErrorCode::SameEdge: return "E_SAME_EDGE";
        case ErrorCode::BondUndefined: return "E_BOND_UNDEFINED";
        case ErrorCode::NotBreakable: return "E_NOT_BREAKABLE";
        case ErrorCode::AlphabetOverlap: return "E_ALPHABET_OVERLAP";
        case ErrorCode::BondNotInjective: return "E_BOND_NOT_INJECTIVE";
        case ErrorCode::BondArity: return "E_BOND_ARITY";
        case ErrorCode::BondDomain: return "E_BOND_DOMAIN";
        case ErrorCode::BondRange: return "E_BOND_RANGE";
        case ErrorCode::StartDisconnected: return "E_START_DISCONNECTED";
        case ErrorCode::LengthMismatch: return "E_LENGTH_MISMATCH";
        case ErrorCode::BoundExceeded: return "E_BOUND_EXCEEDED";
        case ErrorCode::SearchAborted: return "E_SEARCH_ABORTED";
        case ErrorCode::InvalidDomino: return "E_INVALID_DOMINO";
        case ErrorCode::NotRegular: return "E_NOT_REGULAR";
        case ErrorCode::NotInR: return "E_NOT_IN_R";
        case ErrorCode::NotComplementary: return "E_NOT_COMPLEMENTARY";
        case ErrorCode::InvalidGraph: return "E_INVALID_GRAPH";
        case ErrorCode::InvalidInstance: return "E_INVALID_INSTANCE";
        case ErrorCode::Parse: return "E_PARSE";
    }
    return "E_UNKNOWN";
}

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(code_name(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace bonding

#endif  // BONDING_ERROR_HPP

#pragma once

#include <stdexcept>
#include <string>

namespace mlib {

// Every failure the engine can signal. The CLI maps these onto exit codes:
// domain refusals exit 1, malformed input / usage / IO exit 2.
enum class Errc {
    UnknownTarget,
    UnknownVersion,
    UnknownModel,
    DuplicateName,
    DuplicateId,
    NotTypeable,
    InvalidName,
    RoundTripMismatch,
    Deprecated,
    IllegalTransition,
    GateMismatch,
    GateRefused,
    RequiresDemotion,
    NotReviewBacked,
    VersionMismatch,
    Parse,
    AlreadyInitialized,
    Storage,
    Locked,
    Io,
    Usage,
};

inline const char* errc_name(Errc c) {
    switch (c) {
    case Errc::UnknownTarget: return "unknown-target";
    case Errc::UnknownVersion: return "unknown-version";
    case Errc::UnknownModel: return "unknown-model";
    case Errc::DuplicateName: return "duplicate-name";
    case Errc::DuplicateId: return "duplicate-id";
    case Errc::NotTypeable: return "not-typeable";
    case Errc::InvalidName: return "invalid-name";
    case Errc::RoundTripMismatch: return "round-trip-mismatch";
    case Errc::Deprecated: return "deprecated";
    case Errc::IllegalTransition: return "illegal-transition";
    case Errc::GateMismatch: return "gate-mismatch";
    case Errc::GateRefused: return "gate-refused";
    case Errc::RequiresDemotion: return "requires-demotion";
    case Errc::NotReviewBacked: return "not-review-backed";
    case Errc::VersionMismatch: return "version-mismatch";
    case Errc::Parse: return "parse-error";
    case Errc::AlreadyInitialized: return "already-initialized";
    case Errc::Storage: return "storage-error";
    case Errc::Locked: return "locked";
    case Errc::Io: return "io-error";
    case Errc::Usage: return "usage-error";
    }
    return "unknown";
}

class Error : public std::runtime_error {
public:
    Error(Errc code, std::string message)
        : std::runtime_error(std::move(message)), code_(code) {}

    Errc code() const { return code_; }

private:
    Errc code_;
};

// Syntax error in DSL source, with 1-based source position.
class ParseError : public Error {
public:
    ParseError(std::string message, int line, int column)
        : Error(Errc::Parse, message + " at line " + std::to_string(line) +
                                 ", column " + std::to_string(column)),
          line_(line), column_(column) {}

    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

} // namespace mlib

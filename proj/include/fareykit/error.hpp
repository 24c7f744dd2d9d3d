#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fareykit {

enum class ErrorKind {
    ZeroVector,
    Unstable,
    BadCase,
    EmptySet,
    LengthMismatch,
    IndexOutOfRange,
    OracleDomain,
    ParseError,
    MissingVolume,
    DepthExceeded,
    BadMatrix,
    EntryBoundTooLarge,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure surfaced by the library. The kind names the contract that
/// was violated; what() carries the human-readable detail.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace fareykit

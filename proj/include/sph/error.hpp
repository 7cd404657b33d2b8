#pragma once

#include <stdexcept>
#include <string>

namespace sph {

enum class ErrorKind {
    MissingFace,
    MonotonicityViolation,
    Duplicate,
    InvalidSimplex,
    InvalidComplex,
    MissingValue,
    IsolatedNode,
    EmptyForeground,
    CapTooSmall,
    InvalidK,
    InvalidArgument,
    Parse,
    Io,
};

const char* to_string(ErrorKind kind);

/// Library-wide exception. Carries a machine-checkable kind next to the message.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace sph

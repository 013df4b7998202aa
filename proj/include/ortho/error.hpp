#pragma once

#include <stdexcept>
#include <string>

namespace ortho {

enum class ErrorKind {
    InvalidArgument,   // bad parameter value (scale <= 0, sigma < 0, epsilon out of range, ...)
    OutOfDomain,       // evaluation point outside the surface/curve domain
    IoError,           // file unreadable or unwritable
    BadFormat,         // not an 8-bit grayscale PGM
    UnknownSurface,    // builtin name not in the catalog
    NonsmoothPoint,    // derivative requested at a declared kink
    DegenerateRegion,  // region collapsed to the center point
    Internal,
};

const char* to_string(ErrorKind kind);

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

} // namespace ortho

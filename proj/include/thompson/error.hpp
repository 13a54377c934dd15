#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace thompson {

enum class ErrorKind {
    Parse,
    InvalidCode,
    LengthMismatch,
    OutOfRange,
    UnknownSymbol,
    IdentityInput,
    PreconditionViolated,
    ZeroInput,
    NotUnimodular,
    ZeroTarget,
    NotCompletable,
    TrivialImage,
    InvalidTriple,
    SynthesisFailed,
};

std::string_view to_string(ErrorKind kind);

// Every failure in the library is reported through this type; the kind is
// stable and machine readable, the message is for humans.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace thompson

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace galr {

/// Failure categories surfaced by the library. The CLI maps these onto
/// stderr diagnostics and exit codes.
enum class ErrorKind {
    InvalidArgument,
    ReconstructionFailed,
    RationalizationFailed,
    ConjugateCollision,
    BranchPoint,
    DegenerateRoot,
    DegeneratePolynomial,
    Internal,
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

inline void require(bool cond, const std::string& what)
{
    if (!cond) fail(ErrorKind::InvalidArgument, what);
}

}  // namespace galr

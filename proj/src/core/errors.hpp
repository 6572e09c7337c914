#pragma once

#include <stdexcept>
#include <string>

namespace ifsx {

enum class ErrorCode {
    invalid_argument,
    dimension_mismatch,
    parse_error,
    not_converged,
    io_error,
    unsupported,
    infeasible,
};

/// Library-wide exception. Carries a code so the C API can map failures to
/// stable integer statuses without string matching.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace ifsx

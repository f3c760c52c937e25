#pragma once

#include <stdexcept>
#include <string>

namespace omcube {

enum class ErrorCode {
    dimension,
    argument,
    precondition,
    resource,
    method_unavailable,
    no_completion,
    not_cuom,
    parse,
    generation,
    internal,
};

const char* error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& what);

// Internal consistency checks stay active in release builds.
inline void check_invariant(bool ok, const char* what) {
    if (!ok) fail(ErrorCode::internal, std::string("invariant violated: ") + what);
}

}  // namespace omcube

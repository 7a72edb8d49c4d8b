#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace beltsim {

enum class ErrorCode {
    io = 1,        // file access failed
    parse = 2,     // malformed input file
    invalid = 3,   // invariant or precondition violated
    domain = 4,    // query outside the characterized region
    diverged = 5,  // integration produced a non-finite state
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, std::string message)
        : std::runtime_error(std::move(message)), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
    throw Error(code, message);
}

}  // namespace beltsim

#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace bier {

// Failure with a stable machine-readable code ("NotBounded", "TooLarge", ...).
// The code is what tests and the CLI dispatch on; what() carries the detail.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& what)
        : std::runtime_error(code + ": " + what), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

[[noreturn]] inline void fail(const std::string& code, const std::string& what) {
    throw Error(code, what);
}

} // namespace bier

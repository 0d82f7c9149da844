#pragma once

#include <stdexcept>
#include <string>

namespace ra {

/// All failures surface as Error so the CLI can forward the originating
/// error name verbatim ("TruncationTooShort", "NoBoundaryCandidate", ...).
class Error : public std::runtime_error {
public:
    Error(std::string name, const std::string& message)
        : std::runtime_error(message), name_(std::move(name)) {}

    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

[[noreturn]] inline void fail(std::string name, const std::string& message) {
    throw Error(std::move(name), message);
}

} // namespace ra

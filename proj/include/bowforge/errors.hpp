#pragma once

#include <stdexcept>
#include <string>

namespace bowforge {

/* Violated precondition or an operation with no answer on its input.
   kind() is a short machine-readable tag reported by the CLI. */
class DomainError : public std::runtime_error {
public:
    DomainError(std::string kind, const std::string& message)
        : std::runtime_error(message), kind_(std::move(kind)) {}

    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

} // namespace bowforge

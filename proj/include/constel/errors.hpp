// Error types shared across the library.
//
// ConstraintError covers every domain violation: invalid twin pairs,
// malformed gap signatures, range caps, and divisibility preconditions.
// Callers that need to distinguish cases match on the message.

#pragma once

#include <stdexcept>
#include <string>

namespace constel {

class ConstraintError : public std::runtime_error {
public:
    explicit ConstraintError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace constel

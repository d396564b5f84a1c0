#pragma once

#include <stdexcept>
#include <string>

namespace tameblocks {

// Raised when an input object violates one of its declared invariants.
class validation_error : public std::runtime_error {
public:
    explicit validation_error(const std::string& what) : std::runtime_error(what) {}
};

// Raised when a closure/enumeration exceeds its configured size bound.
class bound_error : public std::runtime_error {
public:
    explicit bound_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace tameblocks

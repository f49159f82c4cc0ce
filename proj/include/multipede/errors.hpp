#pragma once

#include <stdexcept>
#include <string>

namespace multipede {

// Bad arguments from the caller (out-of-range vertex, malformed input).
struct InputError : std::runtime_error {
    explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

// Request exceeds a hard resource bound (brute-force size caps etc.).
struct CapacityError : std::runtime_error {
    explicit CapacityError(const std::string& msg) : std::runtime_error(msg) {}
};

// A structural guarantee failed on data that was supposed to satisfy it.
struct IntegrityError : std::runtime_error {
    explicit IntegrityError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace multipede

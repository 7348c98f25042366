#pragma once

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace cellkernel {

/// Precondition violated (mismatched degrees, invalid shapes, wrong ring...).
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Malformed textual input.
class ParseError : public DomainError {
public:
    using DomainError::DomainError;
};

/// A computation would exceed the configured size guard.
class SizeLimitError : public std::length_error {
public:
    using std::length_error::length_error;
};

/// Size guards for anything that materializes a whole symmetric group.
struct Limits {
    int max_d = 8;               // largest degree whose full group may be listed
    int max_action_d = 6;        // largest degree for action matrices (d! rows)
    long max_tensor_dim = 1296;  // n^r, or the dimension of a permutation module
};

/// Defaults, with CELLKERNEL_MAX_D overriding max_d.
inline Limits default_limits() {
    Limits limits;
    if (const char* env = std::getenv("CELLKERNEL_MAX_D")) {
        try {
            int v = std::stoi(env);
            if (v > 0) limits.max_d = limits.max_action_d = v;
        } catch (const std::exception&) {
        }
    }
    return limits;
}

}  // namespace cellkernel

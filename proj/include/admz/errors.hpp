#pragma once

#include <stdexcept>
#include <string>

namespace admz {

/// Bad arguments: malformed text, non-admissible level, mismatched PBW orders.
class InvalidInput : public std::invalid_argument {
public:
    explicit InvalidInput(const std::string& what) : std::invalid_argument(what) {}
};

/// A weight space is larger than the configured dimension cap.
class ResourceLimit : public std::runtime_error {
public:
    explicit ResourceLimit(const std::string& what) : std::runtime_error(what) {}
};

/// An internal cross-check failed. The message names the violated invariant.
class ConsistencyError : public std::runtime_error {
public:
    explicit ConsistencyError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace admz

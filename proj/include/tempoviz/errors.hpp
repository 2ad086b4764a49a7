#pragma once

#include <stdexcept>
#include <string>

namespace tempoviz {

// Malformed or inconsistent input data (parse failures, invariant
// violations in files, degenerate inputs a metric cannot handle).
class DataError : public std::runtime_error {
public:
    explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

// A configurable resource cap was exceeded (e.g. the active partial-path
// cap during causal path extraction).
class ResourceCapError : public std::runtime_error {
public:
    explicit ResourceCapError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace tempoviz

#pragma once

#include <stdexcept>
#include <string>

namespace cubepack {

// Caller misuse: bad dimensions, malformed input, invalid flags.
struct usage_error : std::invalid_argument {
    explicit usage_error(const std::string& what) : std::invalid_argument(what) {}
};

// Instance is beyond the supported scale. Never a silent truncation:
// the message states the limit (and the published magnitude where one exists).
struct capacity_error : std::runtime_error {
    explicit capacity_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace cubepack

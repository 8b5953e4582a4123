#pragma once

#include <stdexcept>
#include <string>

namespace polyrad {

/// Raised when a discrete computation cannot proceed (singular system,
/// non-finite values, rank-deficient fit, non-integrable data).
struct NumericalError : std::runtime_error {
    explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

/// Raised for malformed configuration input (keys, values, file syntax).
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace polyrad

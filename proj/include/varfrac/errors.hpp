#pragma once

#include <stdexcept>
#include <string>

namespace varfrac {

/// Invalid field/kernel/mesh/experiment configuration. The CLI maps this to exit code 2.
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

/// A far-field integral does not converge for the given exponent combination.
struct DivergenceError : std::runtime_error {
    explicit DivergenceError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Kernel requested on the diagonal x = y.
struct SingularityError : std::runtime_error {
    explicit SingularityError(const std::string& msg) : std::runtime_error(msg) {}
};

/// A ball query found no cell centers.
struct EmptyBallError : std::runtime_error {
    explicit EmptyBallError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace varfrac

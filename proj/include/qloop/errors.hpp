#pragma once

#include <stdexcept>
#include <string>

namespace qloop {

/// Invalid user-supplied configuration (roots spec, q, caps).
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Denominator vanishes at eps = 0 after full reduction: the limit is
/// genuinely singular.
struct PoleAtZero : std::runtime_error {
    explicit PoleAtZero(const std::string& msg) : std::runtime_error(msg) {}
};

/// Rational function has no power-series expansion in the requested
/// direction (pole at u = 0 resp. u = infinity).
struct NotExpandable : std::runtime_error {
    explicit NotExpandable(const std::string& msg) : std::runtime_error(msg) {}
};

/// Direct symmetrized summation needs pairwise distinct arguments.
struct RequiresLimit : std::runtime_error {
    explicit RequiresLimit(const std::string& msg) : std::runtime_error(msg) {}
};

/// A conjugated mode matrix has a pole at eps = 0; names the entry.
struct LimitSingular : std::runtime_error {
    explicit LimitSingular(const std::string& msg) : std::runtime_error(msg) {}
};

/// jordan_oracle input has no vanishing power up to the dimension bound.
struct NotNilpotent : std::runtime_error {
    explicit NotNilpotent(const std::string& msg) : std::runtime_error(msg) {}
};

/// An exact identity that must hold by construction failed.
struct VerificationError : std::runtime_error {
    explicit VerificationError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace qloop

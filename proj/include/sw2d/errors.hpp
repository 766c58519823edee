#pragma once

#include <stdexcept>
#include <string>

namespace sw2d {

/// Error categories map one-to-one onto CLI exit codes (see tools/sw2d.cpp):
/// ConfigError -> 2, NumericalError -> 3, ConstraintError -> 4.

/// @brief Bad user input: malformed config text, unknown keys, out-of-range
///        parameters, inconsistent grids.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// @brief Numerical abort during time stepping: non-finite fields or the
///        ill-posedness growth guard tripping in raw mode.
class NumericalError : public std::runtime_error {
public:
    explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

/// @brief A structural invariant was violated: curl-free constraint, decay at
///        the box edge, transverse kx=0 content, speed outside a soliton window.
class ConstraintError : public std::runtime_error {
public:
    explicit ConstraintError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace sw2d

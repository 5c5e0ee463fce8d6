#pragma once

#include <stdexcept>
#include <string>

namespace ctpoly {

/// Bad caller input: out-of-range arguments, normalization violations,
/// roots that are not roots. Maps to CLI exit code 2.
class InvalidInput : public std::invalid_argument {
public:
    explicit InvalidInput(const std::string& what) : std::invalid_argument(what) {}
};

/// An internal cross-check failed (e.g. a quantity exceeded a bound it
/// provably satisfies). Indicates a bug, not bad input. CLI exit code 3.
class ConsistencyError : public std::logic_error {
public:
    explicit ConsistencyError(const std::string& what) : std::logic_error(what) {}
};

/// An iterative numerical procedure did not reach its tolerance within
/// budget. CLI exit code 4.
class ConvergenceError : public std::runtime_error {
public:
    explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace ctpoly

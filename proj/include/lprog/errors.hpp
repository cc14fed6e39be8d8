#pragma once

#include <stdexcept>
#include <string>

namespace lprog {

// Argument-level failures use std::invalid_argument / std::domain_error /
// std::range_error directly. The two types below mark outcomes that the CLI
// reports as findings (exit status 2) rather than as user error.

/// A numerical procedure (quadrature, series) failed to reach its tolerance.
class NumericError : public std::runtime_error {
public:
    explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

/// A search ran to its cap without producing the requested witness.
class ExhaustionError : public std::runtime_error {
public:
    explicit ExhaustionError(const std::string& what) : std::runtime_error(what) {}
};

/// Evaluation at the pole s = 1 of a zeta-type function.
class PoleError : public std::domain_error {
public:
    explicit PoleError(const std::string& what) : std::domain_error(what) {}
};

} // namespace lprog

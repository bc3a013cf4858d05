#pragma once

#include <stdexcept>
#include <string>

namespace amalgam {

// Bad numeric input (nonpositive length, parameter outside a formula's domain).
class domain_error : public std::invalid_argument {
public:
    explicit domain_error(const std::string& what) : std::invalid_argument(what) {}
};

// Matrix is elliptic or parabolic where a hyperbolic one is required.
class not_hyperbolic_error : public std::domain_error {
public:
    explicit not_hyperbolic_error(const std::string& what) : std::domain_error(what) {}
};

// Search exceeded its configured word-length / element / wall-clock budget.
class budget_error : public std::runtime_error {
public:
    explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

// Iterative computation failed to stabilize within the configured depth.
class convergence_error : public std::runtime_error {
public:
    explicit convergence_error(const std::string& what) : std::runtime_error(what) {}
};

// Construction of a representation or amalgam failed (degenerate input).
class construction_error : public std::runtime_error {
public:
    explicit construction_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace amalgam

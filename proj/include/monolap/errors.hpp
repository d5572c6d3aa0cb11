#pragma once

#include <stdexcept>
#include <string>

namespace monolap {

// Argument outside the documented domain (t <= 0, negative order, ...).
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& msg) : std::domain_error(msg) {}
};

// Transform does not converge at the requested point (decay check failed,
// or no truncation point could be located).
class NonConvergentError : public std::runtime_error {
public:
    explicit NonConvergentError(const std::string& msg) : std::runtime_error(msg) {}
};

// |G'(x)| fell below the machine guard in a ratio computation.
class DegenerateDivisionError : public std::runtime_error {
public:
    explicit DegenerateDivisionError(const std::string& msg) : std::runtime_error(msg) {}
};

// Sampled kernel ratio does not match the declared shape hint.
class ShapeHintError : public std::runtime_error {
public:
    explicit ShapeHintError(const std::string& msg) : std::runtime_error(msg) {}
};

// Coefficient sequence does not match the required sign pattern.
class PatternError : public std::runtime_error {
public:
    explicit PatternError(const std::string& msg) : std::runtime_error(msg) {}
};

// Kernel-side limit could not be detected by tail sampling.
class LimitError : public std::runtime_error {
public:
    explicit LimitError(const std::string& msg) : std::runtime_error(msg) {}
};

// No sign-change bracket found where one was expected.
class BracketError : public std::runtime_error {
public:
    explicit BracketError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace monolap

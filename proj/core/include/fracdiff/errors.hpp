#pragma once

#include <stdexcept>
#include <string>

namespace fracdiff {

// A series or iteration failed to reach the requested tolerance.
class NonConvergenceError : public std::runtime_error {
public:
    explicit NonConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

// A theorem hypothesis could not be certified on the given lattice.
class HypothesisError : public std::runtime_error {
public:
    HypothesisError(std::string which, const std::string& what)
        : std::runtime_error(what), which_(std::move(which)) {}
    const std::string& which() const noexcept { return which_; }

private:
    std::string which_;
};

// The implicit spatial system lost solvability at some time step.
class SingularSystemError : public std::runtime_error {
public:
    SingularSystemError(int step, const std::string& what)
        : std::runtime_error(what), step_(step) {}
    int step() const noexcept { return step_; }

private:
    int step_;
};

} // namespace fracdiff

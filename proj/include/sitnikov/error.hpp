#pragma once

#include <stdexcept>
#include <string>

namespace sitnikov {

// Argument outside the domain of an operation (k >= 1, h outside (-2, 0), ...).
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// Evaluation at a genuine singularity of the vector field (q3 == q4 with mu > 0).
class SingularityError : public std::runtime_error {
public:
    explicit SingularityError(const std::string& what) : std::runtime_error(what) {}
};

// Direct integration came closer to collision than the configured threshold.
// Callers should switch to the regularized chart.
class CollisionApproachError : public std::runtime_error {
public:
    explicit CollisionApproachError(const std::string& what) : std::runtime_error(what) {}
};

// Regularized flow started off the L = 0 level set.
class LevelSetError : public std::runtime_error {
public:
    explicit LevelSetError(const std::string& what) : std::runtime_error(what) {}
};

// An iterative method (root finding, event localization) failed to converge.
class ConvergenceError : public std::runtime_error {
public:
    explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace sitnikov

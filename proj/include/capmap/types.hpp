#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace capmap {

using Complex = std::complex<double>;

inline constexpr double pi = 3.141592653589793238462643383279502884;

/// Input outside an operation's domain (bad geometry, argument out of range).
class domain_error : public std::runtime_error {
public:
    explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

/// Evaluation requested at a pole or non-representable point.
class pole_error : public std::runtime_error {
public:
    explicit pole_error(const std::string& what) : std::runtime_error(what) {}
};

/// An iterative scheme hit its work limit before meeting tolerance.
class convergence_error : public std::runtime_error {
public:
    explicit convergence_error(const std::string& what) : std::runtime_error(what) {}
};

/// A principal-branch cut was crossed, or continuation step control failed.
class branch_error : public std::runtime_error {
public:
    explicit branch_error(const std::string& what) : std::runtime_error(what) {}
};

/// Shared tolerance/work knobs for series and quadrature evaluators.
struct EvalConfig {
    double abs_tol = 1e-12;
    double rel_tol = 1e-12;
    int max_terms = 4000;
    int max_refinements = 14;

    void validate() const {
        if (!(abs_tol > 0.0) || !(rel_tol > 0.0))
            throw domain_error("EvalConfig: tolerances must be positive");
        if (max_terms < 1 || max_refinements < 1)
            throw domain_error("EvalConfig: work limits must be >= 1");
    }
};

inline bool is_finite(Complex z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

}  // namespace capmap

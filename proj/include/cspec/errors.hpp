#ifndef CSPEC_ERRORS_HPP
#define CSPEC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cspec {

/// Evaluation landed on a branch cut of a multi-valued function.
struct BranchCutError : std::domain_error {
  explicit BranchCutError(const std::string& msg) : std::domain_error(msg) {}
};

/// An iterative procedure (root search, step-size control, branch
/// tracking) failed to reach its tolerance within its budget.
struct ConvergenceError : std::runtime_error {
  explicit ConvergenceError(const std::string& msg) : std::runtime_error(msg) {}
};

/// A trajectory that was required to escape stayed bounded.
struct NoEscapeError : std::runtime_error {
  explicit NoEscapeError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Root set of V(x) = E is degenerate or empty.
struct TurningPointError : std::runtime_error {
  explicit TurningPointError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace cspec

#endif

#pragma once

#include <functional>
#include <limits>

namespace sglde {

struct RootResult {
    double root;
    double residual;   // |g(root)|
    int iterations;
    bool converged;
};

// Safeguarded scalar root finder: Newton steps with a central-difference
// derivative (h = 1e-6 * max(1, |x|)), kept inside the current sign-change
// bracket; falls back to a bisection step whenever the Newton step leaves
// the bracket or the derivative magnitude drops below 1e-14. Stops when
// |g| <= tol or the bracket width shrinks below tol.
//
// Throws no_root_error when g(lo) and g(hi) have the same sign, and
// convergence_error (carrying the best iterate) when max_iter is exhausted.
// x0 warm-starts the iteration when it lies inside the bracket (NaN: midpoint).
RootResult find_root_safeguarded(const std::function<double(double)>& g, double lo, double hi,
                                 double tol, int max_iter,
                                 double x0 = std::numeric_limits<double>::quiet_NaN());

}  // namespace sglde

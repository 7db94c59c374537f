#pragma once

#include <cmath>
#include <span>
#include <string>

#include "sglde/types.hpp"

namespace sglde {

// Module-wide discretization conventions: stochastic integrals against dX use
// the left endpoint (Ito), time integrals use the trapezoidal rule. Every
// estimator routes through these; nothing re-discretizes privately.

namespace detail {
[[noreturn]] inline void throw_bad_integrand(std::size_t i, double x) {
    throw domain_error("integrand not finite at index " + std::to_string(i) +
                       " (x=" + std::to_string(x) + ")");
}
}  // namespace detail

// Ito integral: sum_i f(X_{i-1}) (X_i - X_{i-1}).
template <class F>
double ito_integral(std::span<const double> values, F&& f) {
    double acc = 0.0;
    for (std::size_t i = 0; i + 1 < values.size(); ++i) {
        const double fx = f(values[i]);
        if (!std::isfinite(fx)) detail::throw_bad_integrand(i, values[i]);
        acc += fx * (values[i + 1] - values[i]);
    }
    return acc;
}

template <class F>
double ito_integral(const Path& path, F&& f) {
    return ito_integral(std::span<const double>(path.values), std::forward<F>(f));
}

// Trapezoidal time integral on a uniform mesh.
template <class F>
double lebesgue_integral(double delta, std::span<const double> values, F&& f) {
    double prev = f(values[0]);
    if (!std::isfinite(prev)) detail::throw_bad_integrand(0, values[0]);
    double acc = 0.0;
    for (std::size_t i = 1; i < values.size(); ++i) {
        const double cur = f(values[i]);
        if (!std::isfinite(cur)) detail::throw_bad_integrand(i, values[i]);
        acc += 0.5 * delta * (prev + cur);
        prev = cur;
    }
    return acc;
}

// Trapezoidal time integral on an arbitrary strictly increasing mesh.
template <class F>
double lebesgue_integral(std::span<const double> times, std::span<const double> values, F&& f) {
    double prev = f(values[0]);
    if (!std::isfinite(prev)) detail::throw_bad_integrand(0, values[0]);
    double acc = 0.0;
    for (std::size_t i = 1; i < values.size(); ++i) {
        const double cur = f(values[i]);
        if (!std::isfinite(cur)) detail::throw_bad_integrand(i, values[i]);
        acc += 0.5 * (times[i] - times[i - 1]) * (prev + cur);
        prev = cur;
    }
    return acc;
}

template <class F>
double lebesgue_integral(const Path& path, F&& f) {
    return lebesgue_integral(path.grid.delta(), std::span<const double>(path.values),
                             std::forward<F>(f));
}

// Realized quadratic variation sum_i (X_i - X_{i-1})^2.
inline double quadratic_variation(std::span<const double> values) {
    double acc = 0.0;
    for (std::size_t i = 0; i + 1 < values.size(); ++i) {
        const double d = values[i + 1] - values[i];
        acc += d * d;
    }
    return acc;
}

inline double quadratic_variation(const Path& path) {
    return quadratic_variation(std::span<const double>(path.values));
}

}  // namespace sglde

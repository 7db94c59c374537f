#pragma once

#include <cstddef>
#include <span>

#include "sglde/rng.hpp"
#include "sglde/types.hpp"

namespace sglde {

// Richards solution X(t) = K / (1 + Q e^{-alpha m (t-t0)})^{1/m},
// Q = (K/x0)^m - 1. Requires 0 < x0 < K, m > 0.
double deterministic_solution(double alpha, double m, double K, double x0, double t0, double t);

// Brownian path on the grid: values[0] = 0, increments ~ N(0, delta) drawn in
// index order (fixed seed => identical path).
BrownianPath sample_brownian(const TimeGrid& grid, RngSeed seed);

// Closed-form solution of the SGLDE driven by the given Brownian path:
//   X(t) = x0 exp[z(t)] (1 + x0^m alpha m \int_0^t exp[m z(s)] ds)^{-1/m},
//   z(s) = (alpha - sigma^2/2)(s - t0) + sigma B(s),
// with the time integral approximated by the trapezoidal rule on the grid.
// Throws domain_error if |z| exceeds kExpGuard (exp would overflow/underflow).
Path simulate_exact(const Params& params, double x0, const TimeGrid& grid,
                    const BrownianPath& brownian);

inline constexpr double kExpGuard = 690.0;

struct EulerOptions {
    double floor = 1e-12;              // positivity floor for the state
    double max_floor_fraction = 0.01;  // error out above this fraction of floored steps
};

struct EulerStats {
    std::size_t floored_steps = 0;
    std::size_t first_floored_index = 0;
};

// Euler-Maruyama scheme X_{i+1} = X_i + alpha X_i (1 - X_i^m) delta
// + sigma X_i dB_i, flooring the state at opts.floor. Serves as the
// independent cross-check of the closed-form simulator.
Path simulate_euler(const Params& params, double x0, const TimeGrid& grid,
                    const BrownianPath& brownian, const EulerOptions& opts = {},
                    EulerStats* stats = nullptr);

// Evenly strided subset of a path containing both endpoints.
ObservationSet subsample(const Path& path, double keep_fraction);

// Subset at explicit indices; must be strictly increasing and include 0 and n.
ObservationSet subsample(const Path& path, std::span<const std::size_t> indices);

namespace detail {
// Shared closed-form recursion: fills out[0..n] from Brownian values b[0..n]
// on a uniform mesh with step delta, time measured from the first point.
void exact_core(const Params& params, double x0, double delta, std::span<const double> brownian,
                std::span<double> out);
}  // namespace detail

}  // namespace sglde

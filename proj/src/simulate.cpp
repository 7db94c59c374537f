#include "sglde/simulate.hpp"

#include <cmath>
#include <string>
#include <vector>

namespace sglde {

double deterministic_solution(double alpha, double m, double K, double x0, double t0, double t) {
    if (!(m > 0.0)) throw domain_error("deterministic_solution: m must be > 0");
    if (!(alpha > 0.0)) throw domain_error("deterministic_solution: alpha must be > 0");
    if (!(x0 > 0.0) || !(x0 < K))
        throw domain_error("deterministic_solution: x0 must lie in (0, K)");
    const double Q = std::pow(K / x0, m) - 1.0;
    return K / std::pow(1.0 + Q * std::exp(-alpha * m * (t - t0)), 1.0 / m);
}

BrownianPath sample_brownian(const TimeGrid& grid, RngSeed seed) {
    NormalSampler normal(seed);
    const double sd = std::sqrt(grid.delta());
    std::vector<double> values(grid.n() + 1);
    values[0] = 0.0;
    for (std::size_t i = 1; i <= grid.n(); ++i) values[i] = values[i - 1] + sd * normal();
    return BrownianPath{grid, std::move(values)};
}

namespace detail {

void exact_core(const Params& params, double x0, double delta, std::span<const double> brownian,
                std::span<double> out) {
    const double mu = params.alpha - 0.5 * params.sigma * params.sigma;
    const double x0m = std::pow(x0, params.m);
    const double am = params.alpha * params.m;
    double integral = 0.0;                     // \int exp[m z(s)] ds, trapezoidal
    double prev_integrand = 1.0;               // exp(m z) at s = t0 (z = 0)
    out[0] = x0;
    for (std::size_t i = 1; i < out.size(); ++i) {
        const double z = mu * (static_cast<double>(i) * delta) + params.sigma * brownian[i];
        const double mz = params.m * z;
        if (std::abs(z) > kExpGuard || std::abs(mz) > kExpGuard)
            throw domain_error("simulate_exact: exponent " + std::to_string(z) +
                               " beyond guard at index " + std::to_string(i));
        const double integrand = std::exp(mz);
        integral += 0.5 * delta * (prev_integrand + integrand);
        prev_integrand = integrand;
        out[i] = x0 * std::exp(z) * std::pow(1.0 + x0m * am * integral, -1.0 / params.m);
    }
}

}  // namespace detail

Path simulate_exact(const Params& params, double x0, const TimeGrid& grid,
                    const BrownianPath& brownian) {
    if (!(x0 > 0.0) || !std::isfinite(x0))
        throw domain_error("simulate_exact: x0 must be positive and finite");
    if (!(brownian.grid == grid))
        throw domain_error("simulate_exact: Brownian path on a different grid");
    std::vector<double> values(grid.n() + 1);
    detail::exact_core(params, x0, grid.delta(), brownian.values, values);
    return Path{grid, std::move(values)};
}

Path simulate_euler(const Params& params, double x0, const TimeGrid& grid,
                    const BrownianPath& brownian, const EulerOptions& opts, EulerStats* stats) {
    if (!(x0 > 0.0) || !std::isfinite(x0))
        throw domain_error("simulate_euler: x0 must be positive and finite");
    if (!(brownian.grid == grid))
        throw domain_error("simulate_euler: Brownian path on a different grid");
    const double delta = grid.delta();
    std::vector<double> values(grid.n() + 1);
    values[0] = x0;
    std::size_t floored = 0;
    std::size_t first_floored = 0;
    double x = x0;
    for (std::size_t i = 0; i < grid.n(); ++i) {
        const double dB = brownian.values[i + 1] - brownian.values[i];
        x += params.alpha * x * (1.0 - std::pow(x, params.m)) * delta + params.sigma * x * dB;
        if (!(x > opts.floor)) {
            if (floored == 0) first_floored = i + 1;
            ++floored;
            x = opts.floor;
        }
        values[i + 1] = x;
    }
    if (stats != nullptr) {
        stats->floored_steps = floored;
        stats->first_floored_index = first_floored;
    }
    const double frac = static_cast<double>(floored) / static_cast<double>(grid.n());
    if (frac > opts.max_floor_fraction)
        throw domain_error("simulate_euler: positivity floor hit on " + std::to_string(floored) +
                           " steps (first at index " + std::to_string(first_floored) + ")");
    return Path{grid, std::move(values)};
}

ObservationSet subsample(const Path& path, double keep_fraction) {
    if (!(keep_fraction > 0.0) || !(keep_fraction <= 1.0))
        throw domain_error("subsample: keep_fraction must lie in (0, 1]");
    const std::size_t n = path.grid.n();
    const auto stride = static_cast<std::size_t>(std::llround(1.0 / keep_fraction));
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i <= n; i += stride) idx.push_back(i);
    if (idx.back() != n) idx.push_back(n);
    return subsample(path, idx);
}

ObservationSet subsample(const Path& path, std::span<const std::size_t> indices) {
    const std::size_t n = path.grid.n();
    if (indices.size() < 2 || indices.front() != 0 || indices.back() != n)
        throw domain_error("subsample: indices must include both endpoints 0 and n");
    std::vector<double> times, values;
    times.reserve(indices.size());
    values.reserve(indices.size());
    for (std::size_t j = 0; j < indices.size(); ++j) {
        const std::size_t i = indices[j];
        if (i > n) throw domain_error("subsample: index out of range");
        if (j > 0 && indices[j] <= indices[j - 1])
            throw domain_error("subsample: indices must be strictly increasing");
        times.push_back(path.grid.time(i));
        values.push_back(path.values[i]);
    }
    return ObservationSet{std::move(times), std::move(values)};
}

}  // namespace sglde

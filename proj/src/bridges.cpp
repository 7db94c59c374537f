#include "sglde/bridges.hpp"

#include <cmath>

#include "sglde/simulate.hpp"

namespace sglde {

namespace detail {

namespace {

void fill_brownian(std::vector<double>& b, std::size_t n, double sd, NormalSampler& normal) {
    b.resize(n + 1);
    b[0] = 0.0;
    for (std::size_t i = 1; i <= n; ++i) b[i] = b[i - 1] + sd * normal();
}

// First index where sign(x1 - z) changes, equality counted as a crossing;
// z is x2 read backwards. Returns n_sub+1 when there is no crossing.
std::size_t crossing_index(std::span<const double> x1, std::span<const double> x2) {
    const std::size_t n = x1.size() - 1;
    const double d0 = x1[0] - x2[n];
    if (d0 == 0.0) return 0;
    const bool neg0 = std::signbit(d0);
    for (std::size_t i = 1; i <= n; ++i) {
        const double d = x1[i] - x2[n - i];
        if (d == 0.0 || std::signbit(d) != neg0) return i;
    }
    return n + 1;
}

}  // namespace

std::pair<int, BridgeMethod> sample_bridge_into(const Params& params, double a, double b,
                                                double delta_sub, std::size_t n_sub,
                                                int max_attempts, NormalSampler& normal,
                                                BridgeScratch& scratch, std::span<double> out) {
    const double sd = std::sqrt(delta_sub);
    scratch.x1.resize(n_sub + 1);
    scratch.x2.resize(n_sub + 1);
    for (int attempt = 1; attempt <= max_attempts; ++attempt) {
        fill_brownian(scratch.b1, n_sub, sd, normal);
        fill_brownian(scratch.b2, n_sub, sd, normal);
        exact_core(params, a, delta_sub, scratch.b1, scratch.x1);
        exact_core(params, b, delta_sub, scratch.b2, scratch.x2);
        const std::size_t tau = crossing_index(scratch.x1, scratch.x2);
        if (tau <= n_sub) {
            for (std::size_t i = 0; i <= n_sub; ++i)
                out[i] = i < tau ? scratch.x1[i] : scratch.x2[n_sub - i];
            out[0] = a;
            out[n_sub] = b;
            return {attempt, BridgeMethod::crossing};
        }
    }
    // fallback proposal: log-linear interpolation plus a Brownian bridge in
    // log space scaled by sigma (approximate, always succeeds)
    fill_brownian(scratch.b1, n_sub, sd, normal);
    const double la = std::log(a);
    const double lb = std::log(b);
    const double wn = scratch.b1[n_sub];
    for (std::size_t i = 0; i <= n_sub; ++i) {
        const double w = static_cast<double>(i) / static_cast<double>(n_sub);
        out[i] = std::exp(la + w * (lb - la) + params.sigma * (scratch.b1[i] - w * wn));
    }
    out[0] = a;
    out[n_sub] = b;
    return {max_attempts, BridgeMethod::fallback};
}

}  // namespace detail

Bridge sample_bridge(const BridgeRequest& request, RngSeed seed) {
    NormalSampler normal(seed);
    detail::BridgeScratch scratch;
    std::vector<double> values(request.subgrid.n() + 1);
    const auto [attempts, method] =
        detail::sample_bridge_into(request.params, request.a, request.b, request.subgrid.delta(),
                                   request.subgrid.n(), request.max_attempts, normal, scratch,
                                   values);
    return Bridge{Path{request.subgrid, std::move(values)}, attempts, method};
}

Path conditional_mean_path(const BridgeRequest& request, RngSeed seed) {
    const std::size_t n = request.subgrid.n();
    std::vector<double> acc(n + 1, 0.0);
    std::vector<double> values(n + 1);
    detail::BridgeScratch scratch;
    for (int j = 0; j < request.n_bridges; ++j) {
        NormalSampler normal(seed.with(static_cast<std::uint64_t>(j)));
        detail::sample_bridge_into(request.params, request.a, request.b, request.subgrid.delta(),
                                   n, request.max_attempts, normal, scratch, values);
        for (std::size_t i = 0; i <= n; ++i) acc[i] += values[i];
    }
    const double inv = 1.0 / static_cast<double>(request.n_bridges);
    for (std::size_t i = 0; i <= n; ++i) acc[i] *= inv;
    acc[0] = request.a;
    acc[n] = request.b;
    return Path{request.subgrid, std::move(acc)};
}

}  // namespace sglde

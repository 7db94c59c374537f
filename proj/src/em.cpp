#include "sglde/em.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "sglde/bridges.hpp"
#include "sglde/detail/pooled_stats.hpp"
#include "sglde/integrals.hpp"
#include "sglde/root.hpp"

namespace sglde {

namespace {

using detail::PooledStats;

// Drift-compensated quadratic variation of the observed increments.
double sigma_residual_qv(const ObservationSet& obs, double alpha, double m) {
    double num = 0.0;
    for (std::size_t i = 0; i + 1 < obs.values.size(); ++i) {
        const double x = obs.values[i];
        const double delta = obs.times[i + 1] - obs.times[i];
        const double drift = alpha * x * (1.0 - std::pow(x, m)) * delta;
        const double r = obs.values[i + 1] - x - drift;
        num += r * r;
    }
    const double den =
        lebesgue_integral(std::span<const double>(obs.times), std::span<const double>(obs.values),
                          [](double x) { return x * x; });
    if (!(den > 0.0)) throw domain_error("em sigma update: zero denominator");
    return std::sqrt(num / den);
}

std::vector<std::size_t> substeps_per_gap(const ObservationSet& obs, std::size_t reconstruct) {
    const std::size_t k = obs.gaps();
    if (reconstruct == 0) reconstruct = 10 * k;
    const double target = (obs.times.back() - obs.times.front()) / static_cast<double>(reconstruct);
    std::vector<std::size_t> n_sub(k);
    for (std::size_t i = 0; i < k; ++i) {
        const double gap = obs.times[i + 1] - obs.times[i];
        n_sub[i] = static_cast<std::size_t>(std::max(1LL, std::llround(gap / target)));
    }
    return n_sub;
}

JointOptions joint_options(const EmConfig& config) {
    JointOptions opts;
    opts.bracket = config.m_bracket;
    opts.tol = config.tol;
    opts.max_iter = config.max_iter;
    return opts;
}

}  // namespace

ThetaEstimate em_initialize(const ObservationSet& obs, const EmConfig& config) {
    const auto [mn, mx] = std::minmax_element(obs.values.begin(), obs.values.end());
    if (*mn == *mx)
        throw degenerate_path_error("em_initialize: constant observations");
    const std::span<const double> times(obs.times);
    const std::span<const double> values(obs.values);
    try {
        return estimate_joint(times, values, joint_options(config));
    } catch (const no_root_error&) {
        // no sign change on the coarse records: return a flagged best effort
    } catch (const convergence_error&) {
    }
    ThetaEstimate est;
    est.sigma = estimate_sigma_qv(times, values);
    double best_m = config.m_bracket.lo;
    double best_g = std::numeric_limits<double>::infinity();
    const int scan_points = 64;
    const double log_lo = std::log(config.m_bracket.lo);
    const double log_hi = std::log(config.m_bracket.hi);
    for (int j = 0; j < scan_points; ++j) {
        const double m = std::exp(log_lo + (log_hi - log_lo) * j / (scan_points - 1.0));
        const double g = std::abs(score_m(times, values, m));
        if (g < best_g) {
            best_g = g;
            best_m = m;
        }
    }
    est.m = best_m;
    est.alpha = estimate_alpha_mle(times, values, best_m);
    est.converged = false;
    est.residual = best_g;
    return est;
}

EmState em_step(const EmState& state, const ObservationSet& obs, const EmConfig& config) {
    const std::size_t k = obs.gaps();
    const std::vector<std::size_t> n_sub = substeps_per_gap(obs, config.reconstruct_points);

    const bool any_imputed =
        std::any_of(n_sub.begin(), n_sub.end(), [](std::size_t n) { return n >= 2; });
    EmState next;
    next.iteration = state.iteration + 1;
    if (!any_imputed) {
        // nothing to impute: the EM degenerates to complete-data estimation
        next.theta =
            estimate_joint(std::span<const double>(obs.times),
                           std::span<const double>(obs.values), joint_options(config));
        next.proposed_trajectory = Series{obs.times, obs.values};
        next.fallback_fraction = 0.0;
        return next;
    }

    if (!(state.theta.alpha > 0.0) || !(state.theta.m > 0.0) || !(state.theta.sigma >= 0.0))
        throw domain_error("em_step: iteration " + std::to_string(state.iteration) +
                           ": current theta outside the parameter domain");
    const Params theta_n(state.theta.alpha, state.theta.m, state.theta.sigma);

    std::size_t total_points = 0;
    for (std::size_t i = 0; i < k; ++i) total_points += n_sub[i] + 1;

    PooledStats stats;
    stats.reserve(config.n_bridges > 1 ? total_points * config.n_bridges : total_points);
    Series prop;
    prop.times.reserve(total_points - k + 1);
    prop.values.reserve(total_points - k + 1);
    prop.times.push_back(obs.times.front());
    prop.values.push_back(obs.values.front());

    std::size_t fallbacks = 0;
    std::size_t bridges_total = 0;
    detail::BridgeScratch scratch;
    std::vector<double> bridge(2);
    std::vector<double> mean_acc;

    for (std::size_t i = 0; i < k; ++i) {
        const double a = obs.values[i];
        const double b = obs.values[i + 1];
        const double gap = obs.times[i + 1] - obs.times[i];
        const std::size_t ns = n_sub[i];
        const double delta_sub = gap / static_cast<double>(ns);
        if (ns < 2) {
            // zero-length gap: the observed segment is its own statistic
            const double seg[2] = {a, b};
            stats.append_segment(std::span<const double>(seg, 2), gap, 1.0);
            prop.times.push_back(obs.times[i + 1]);
            prop.values.push_back(b);
            continue;
        }
        bridge.resize(ns + 1);
        mean_acc.assign(ns + 1, 0.0);
        const double weight = 1.0 / static_cast<double>(config.n_bridges);
        const RngSeed gap_seed =
            config.seed.with(static_cast<std::uint64_t>(state.iteration), i);
        for (int j = 0; j < config.n_bridges; ++j) {
            NormalSampler normal(gap_seed.with(static_cast<std::uint64_t>(j)));
            const auto [attempts, method] = detail::sample_bridge_into(
                theta_n, a, b, delta_sub, ns, config.max_attempts, normal, scratch, bridge);
            (void)attempts;
            if (method == BridgeMethod::fallback) ++fallbacks;
            ++bridges_total;
            stats.append_segment(bridge, delta_sub, weight);
            for (std::size_t p = 0; p <= ns; ++p) mean_acc[p] += bridge[p];
        }
        for (std::size_t p = 1; p <= ns; ++p) {
            prop.times.push_back(obs.times[i] + static_cast<double>(p) * delta_sub);
            prop.values.push_back(mean_acc[p] * weight);
        }
        prop.times.back() = obs.times[i + 1];
        prop.values.back() = b;  // endpoints pinned exactly
    }

    // M-step on the ensemble statistics, warm-started at the current m
    ThetaEstimate theta;
    try {
        const RootResult r = find_root_safeguarded(
            [&stats](double m) { return stats.score(m); }, config.m_bracket.lo,
            config.m_bracket.hi, config.tol, config.max_iter, state.theta.m);
        theta.m = r.root;
        theta.iterations = r.iterations;
        theta.residual = r.residual;
        theta.converged = r.converged;
    } catch (const error& e) {
        throw error("em_step: iteration " + std::to_string(state.iteration) +
                    ": M-step m solve: " + e.what());
    }
    theta.alpha = stats.alpha_at(theta.m);
    theta.sigma = sigma_residual_qv(obs, theta.alpha, theta.m);

    next.theta = theta;
    next.proposed_trajectory = std::move(prop);
    next.fallback_fraction =
        bridges_total == 0 ? 0.0
                           : static_cast<double>(fallbacks) / static_cast<double>(bridges_total);
    return next;
}

EmTrace run_em(const ObservationSet& obs, const EmConfig& config) {
    if (config.iterations < 1) throw domain_error("run_em: iterations must be >= 1");
    if (config.n_bridges < 1) throw domain_error("run_em: n_bridges must be >= 1");
    EmTrace trace;
    trace.reserve(static_cast<std::size_t>(config.iterations) + 1);

    EmState state;
    state.iteration = 0;
    state.theta = em_initialize(obs, config);
    state.proposed_trajectory = Series{obs.times, obs.values};
    trace.push_back(EmIterate{0, state.theta, 0.0});

    for (int n = 1; n <= config.iterations; ++n) {
        EmState next;
        try {
            next = em_step(state, obs, config);
        } catch (const error& e) {
            throw error("run_em: iteration " + std::to_string(n) + ": " + e.what());
        }
        trace.push_back(EmIterate{n, next.theta, next.fallback_fraction});
        const bool settled = config.early_stop &&
                             std::abs(next.theta.alpha - state.theta.alpha) < config.early_stop_eps &&
                             std::abs(next.theta.m - state.theta.m) < config.early_stop_eps &&
                             std::abs(next.theta.sigma - state.theta.sigma) < config.early_stop_eps;
        state = std::move(next);
        if (settled) break;
    }
    return trace;
}

}  // namespace sglde

#include "sglde/estimators.hpp"

#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "sglde/integrals.hpp"

namespace sglde {

namespace {

constexpr double kDegenerateDenominator = 1e-300;

template <class LebFn>
double sigma_qv_core(std::span<const double> values, LebFn&& leb) {
    const double qv = quadratic_variation(values);
    const double den = leb([](double x) { return x * x; });
    if (!(den > 0.0)) throw domain_error("estimate_sigma_qv: zero denominator");
    return std::sqrt(qv / den);
}

template <class LebFn>
double alpha_mle_core(std::span<const double> values, LebFn&& leb, double m) {
    if (!(m > 0.0)) throw domain_error("estimate_alpha_mle: m must be > 0");
    const double num =
        ito_integral(values, [m](double x) { return (1.0 - std::pow(x, m)) / x; });
    const double den = leb([m](double x) {
        const double w = 1.0 - std::pow(x, m);
        return w * w;
    });
    if (den < kDegenerateDenominator)
        throw degenerate_path_error("estimate_alpha_mle: path pinned at equilibrium");
    return num / den;
}

template <class LebFn>
double score_m_core(std::span<const double> values, LebFn&& leb, double m) {
    if (!(m > 0.0)) throw domain_error("score_m: m must be > 0");
    const double D = leb([m](double x) {
        const double w = 1.0 - std::pow(x, m);
        return w * w;
    });
    const double A =
        ito_integral(values, [m](double x) { return std::pow(x, m - 1.0) * -std::log(x); });
    const double I =
        ito_integral(values, [m](double x) { return (1.0 - std::pow(x, m)) / x; });
    const double B = leb([m](double x) {
        const double xm = std::pow(x, m);
        return xm * (1.0 - xm) * -std::log(x);
    });
    return D * A - I * B;
}

double estimate_m_on(const std::function<double(double)>& g, MBracket bracket, double tol,
                     int max_iter, RootResult* report) {
    if (!(bracket.lo > 0.0) || !(bracket.lo < bracket.hi))
        throw domain_error("estimate_m: bracket must satisfy 0 < lo < hi");
    const RootResult r = find_root_safeguarded(g, bracket.lo, bracket.hi, tol, max_iter);
    if (report != nullptr) *report = r;
    return r.root;
}

template <class MFn, class AFn, class SFn>
ThetaEstimate joint_core(MFn&& solve_m, AFn&& alpha_at, SFn&& sigma_of, const JointOptions& opts) {
    ThetaEstimate est;
    est.sigma = sigma_of();
    RootResult rep{};
    est.m = solve_m(&rep);
    est.alpha = alpha_at(est.m);
    est.iterations = rep.iterations;
    est.residual = rep.residual;
    est.converged = rep.converged;
    // self-consistency: re-running the (m, alpha) stage is a fixed point
    for (int pass = 1; pass < opts.max_outer; ++pass) {
        RootResult rep2{};
        const double m2 = solve_m(&rep2);
        const double a2 = alpha_at(m2);
        const bool stable = std::abs(m2 - est.m) <= opts.tol &&
                            std::abs(a2 - est.alpha) <= opts.tol * std::max(1.0, std::abs(a2));
        est.m = m2;
        est.alpha = a2;
        est.iterations += rep2.iterations;
        est.residual = rep2.residual;
        if (stable) break;
        if (pass == opts.max_outer - 1)
            throw convergence_error("estimate_joint: (m, alpha) stage did not reach a fixed point",
                                    m2, rep2.residual);
    }
    return est;
}

}  // namespace

double estimate_sigma_qv(const Path& path) {
    return sigma_qv_core(path.values, [&path](auto&& f) {
        return lebesgue_integral(path.grid.delta(), std::span<const double>(path.values), f);
    });
}

double estimate_sigma_qv(std::span<const double> times, std::span<const double> values) {
    if (values.size() < 2) throw domain_error("estimate_sigma_qv: needs at least 2 points");
    return sigma_qv_core(values, [times, values](auto&& f) {
        return lebesgue_integral(times, values, f);
    });
}

double estimate_alpha_mle(const Path& path, double m) {
    return alpha_mle_core(path.values, [&path](auto&& f) {
        return lebesgue_integral(path.grid.delta(), std::span<const double>(path.values), f);
    }, m);
}

double estimate_alpha_mle(std::span<const double> times, std::span<const double> values, double m) {
    return alpha_mle_core(values, [times, values](auto&& f) {
        return lebesgue_integral(times, values, f);
    }, m);
}

double score_m(const Path& path, double m) {
    return score_m_core(path.values, [&path](auto&& f) {
        return lebesgue_integral(path.grid.delta(), std::span<const double>(path.values), f);
    }, m);
}

double score_m(std::span<const double> times, std::span<const double> values, double m) {
    return score_m_core(values, [times, values](auto&& f) {
        return lebesgue_integral(times, values, f);
    }, m);
}

double estimate_m(const Path& path, MBracket bracket, double tol, int max_iter,
                  RootResult* report) {
    return estimate_m_on([&path](double m) { return score_m(path, m); }, bracket, tol, max_iter,
                         report);
}

double estimate_m(std::span<const double> times, std::span<const double> values, MBracket bracket,
                  double tol, int max_iter, RootResult* report) {
    return estimate_m_on([times, values](double m) { return score_m(times, values, m); }, bracket,
                         tol, max_iter, report);
}

ThetaEstimate estimate_joint(const Path& path, const JointOptions& opts) {
    return joint_core(
        [&](RootResult* rep) {
            return estimate_m(path, opts.bracket, opts.tol, opts.max_iter, rep);
        },
        [&](double m) { return estimate_alpha_mle(path, m); },
        [&] { return estimate_sigma_qv(path); }, opts);
}

ThetaEstimate estimate_joint(std::span<const double> times, std::span<const double> values,
                             const JointOptions& opts) {
    return joint_core(
        [&](RootResult* rep) {
            return estimate_m(times, values, opts.bracket, opts.tol, opts.max_iter, rep);
        },
        [&](double m) { return estimate_alpha_mle(times, values, m); },
        [&] { return estimate_sigma_qv(times, values); }, opts);
}

double log_likelihood_ratio(const Path& path, const Theta& theta, const Theta& theta0,
                            double sigma) {
    if (!(sigma > 0.0))
        throw domain_error("log_likelihood_ratio: sigma = 0 gives a degenerate measure");
    const double inv_s2 = 1.0 / (sigma * sigma);
    const double a = theta.alpha, m = theta.m;
    const double a0 = theta0.alpha, m0 = theta0.m;
    const double drift_term = ito_integral(path, [=](double x) {
        return (a * (1.0 - std::pow(x, m)) - a0 * (1.0 - std::pow(x, m0))) / x;
    });
    const double dt_term = lebesgue_integral(path, [=](double x) {
        const double w = 1.0 - std::pow(x, m);
        const double w0 = 1.0 - std::pow(x, m0);
        return a * a * w * w - a0 * a0 * w0 * w0;
    });
    return inv_s2 * drift_term - 0.5 * inv_s2 * dt_term;
}

ConsistencyDiagnostics consistency_diagnostics(const Path& path, double m_hat, double alpha0,
                                               double m0, double sigma) {
    if (!(sigma > 0.0)) throw domain_error("consistency_diagnostics: sigma must be > 0");
    const double delta = path.grid.delta();
    const auto& x = path.values;

    // dB reconstructed from the SDE at the supplied true parameters
    std::vector<double> dB(x.size() - 1);
    for (std::size_t i = 0; i + 1 < x.size(); ++i) {
        const double drift = alpha0 * x[i] * (1.0 - std::pow(x[i], m0));
        dB[i] = (x[i + 1] - x[i] - drift * delta) / (sigma * x[i]);
    }

    double I1 = 0.0, I2 = 0.0;
    for (std::size_t i = 0; i + 1 < x.size(); ++i) {
        const double xm = std::pow(x[i], m_hat);
        I1 += xm * std::log(x[i]) * dB[i];
        I2 += (1.0 - xm) * dB[i];
    }

    ConsistencyDiagnostics d{};
    d.I1 = I1;
    d.I2 = I2;
    d.J1 = lebesgue_integral(path, [=](double v) { return std::pow(v, m_hat) * std::log(v); });
    d.J2 = lebesgue_integral(path, [=](double v) {
        const double w = 1.0 - std::pow(v, m_hat);
        return w * w;
    });
    d.J3 = lebesgue_integral(path,
                             [=](double v) { return std::pow(v, 2.0 * m_hat) * std::log(v); });
    d.calJ1 = lebesgue_integral(path, [=](double v) {
        return std::pow(v, m_hat) * (std::pow(v, m0) - std::pow(v, m_hat)) * std::log(v);
    });
    d.calJ2 = lebesgue_integral(path, [=](double v) {
        return (1.0 - std::pow(v, m_hat)) * (std::pow(v, m_hat) - std::pow(v, m0));
    });
    d.T = path.grid.T() - path.grid.t0();
    return d;
}

bool exceeds_carrying_capacity(std::span<const double> values) {
    for (double v : values)
        if (v > Params::K) return true;
    return false;
}

}  // namespace sglde

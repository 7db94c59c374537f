#pragma once

#include <span>

#include "sglde/root.hpp"
#include "sglde/types.hpp"

namespace sglde {

// Result of the complete-observation estimation pipeline.
struct ThetaEstimate {
    double alpha = 0.0;
    double m = 0.0;
    double sigma = 0.0;
    bool converged = false;
    int iterations = 0;
    double residual = 0.0;  // |g(m)| at the returned root
};

// Appendix integrals evaluated on one path; the proof's sign facts
// (J1 < 0, J2 > 0, J3 < 0 for paths inside (0,1)) are testable invariants.
struct ConsistencyDiagnostics {
    double I1, I2;        // stochastic integrals against the reconstructed noise
    double J1, J2, J3;    // time integrals at m_hat
    double calJ1, calJ2;  // mixed integrals coupling m_hat and the true m0
    double T;             // horizon
};

struct MBracket {
    double lo = 0.51;  // the m <= 1/2 regime is a documented failure mode; stay above it
    double hi = 50.0;
};

struct JointOptions {
    MBracket bracket{};
    double tol = 1e-8;
    int max_iter = 100;
    int max_outer = 5;  // fixed-point passes over the (m, alpha) stage
};

// Quadratic-variation estimator sqrt(QV / int X^2 dt); on a uniform mesh the
// trapezoidal denominator reproduces exactly
//   sqrt( 2 sum (X_i - X_{i-1})^2 / (delta sum (X_i^2 + X_{i-1}^2)) ).
double estimate_sigma_qv(const Path& path);
double estimate_sigma_qv(std::span<const double> times, std::span<const double> values);

// Explicit drift-rate MLE: [int (1-X^m)/X dX] / [int (1-X^m)^2 dt].
double estimate_alpha_mle(const Path& path, double m);
double estimate_alpha_mle(std::span<const double> times, std::span<const double> values, double m);

// Score g(m) = d/dm of the log-likelihood with the alpha-MLE substituted:
//   [int (1-X^m)^2 dt][int X^{m-1}(-ln X) dX]
// - [int (1-X^m)/X dX][int X^m (1-X^m)(-ln X) dt].
double score_m(const Path& path, double m);
double score_m(std::span<const double> times, std::span<const double> values, double m);

// Positive root of g(m) = 0 by safeguarded Newton on the bracket.
// Throws no_root_error / convergence_error; report (optional) carries the
// iteration count and residual.
double estimate_m(const Path& path, MBracket bracket = {}, double tol = 1e-8, int max_iter = 100,
                  RootResult* report = nullptr);
double estimate_m(std::span<const double> times, std::span<const double> values,
                  MBracket bracket = {}, double tol = 1e-8, int max_iter = 100,
                  RootResult* report = nullptr);

// Pipeline: sigma via quadratic variation, then m via the score root (the
// alpha-MLE is already folded into g), then alpha at m_hat. Extra outer
// passes re-run the (m, alpha) stage and must reproduce it to tol.
ThetaEstimate estimate_joint(const Path& path, const JointOptions& opts = {});
ThetaEstimate estimate_joint(std::span<const double> times, std::span<const double> values,
                             const JointOptions& opts = {});

// Girsanov log-likelihood ratio log dP_theta/dP_theta0 evaluated with the
// module's discretization conventions. sigma must be positive.
double log_likelihood_ratio(const Path& path, const Theta& theta, const Theta& theta0,
                            double sigma);

// Appendix integrals with dB reconstructed from the path using the supplied
// true parameters: dB_i = (dX_i - alpha0 X (1 - X^{m0}) delta) / (sigma X).
ConsistencyDiagnostics consistency_diagnostics(const Path& path, double m_hat, double alpha0,
                                               double m0, double sigma);

// Noise can push the state above K = 1 transiently; integrands tolerate it
// (ln X changes sign). Callers flag, never clamp.
bool exceeds_carrying_capacity(std::span<const double> values);

}  // namespace sglde

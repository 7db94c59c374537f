#pragma once

#include <vector>

#include "sglde/estimators.hpp"
#include "sglde/rng.hpp"
#include "sglde/types.hpp"

namespace sglde {

struct EmConfig {
    int iterations = 10;     // fixed count, as in the experiments
    int n_bridges = 100;     // N
    MBracket m_bracket{};
    double tol = 1e-8;       // Newton residual tolerance
    int max_iter = 100;      // Newton step budget
    RngSeed seed{};
    // Target size of the reconstructed trajectory (number of mesh points of
    // the completed data). 0 means 10 substeps per observation gap.
    std::size_t reconstruct_points = 0;
    int max_attempts = 50;   // bridge crossing retries before fallback
    bool early_stop = false;
    double early_stop_eps = 1e-6;  // per-coordinate change threshold
};

struct EmState {
    int iteration = 0;
    ThetaEstimate theta{};
    // Completed trajectory assembled from the per-gap conditional means;
    // passes through every observation exactly. Piecewise uniform, so a
    // Series rather than a Path when observation gaps differ.
    Series proposed_trajectory{};
    double fallback_fraction = 0.0;
};

struct EmIterate {
    int iteration;
    ThetaEstimate theta;
    double fallback_fraction;
};

using EmTrace = std::vector<EmIterate>;

// First proposal: the complete-data estimators applied directly to the sparse
// records. Can be inaccurate (coarse quadratic variation picks up squared
// drift increments); a failed Newton bracket yields a flagged best-effort
// estimate instead of an error. Constant observations are degenerate.
ThetaEstimate em_initialize(const ObservationSet& obs, const EmConfig& config = {});

// One E-step + M-step + sigma update.
//
// E-step: for every gap needing imputation, sample N crossing bridges at the
// current theta and accumulate the conditional expectations of the likelihood
// statistics (the four path integrals of the score/alpha formulas), plus the
// pointwise mean trajectory. M-step: m from the root of the ensemble score,
// alpha from the ensemble ratio. Sigma update: drift-compensated quadratic
// variation of the observed increments at the new drift estimate,
//   sigma^2 = sum_i (dx_i - alpha x_i (1 - x_i^m) delta_i)^2 / int x^2 dt,
// which removes the squared-drift inflation that a raw coarse QV suffers.
// When no gap needs imputation the step degenerates to complete-data
// estimation (estimate_joint on the records) so full data is a fixed point.
//
// Per-gap noise streams derive from (seed, iteration, gap), so results do not
// depend on scheduling.
EmState em_step(const EmState& state, const ObservationSet& obs, const EmConfig& config);

// Full driver: trace entry 0 is the initialization, entry n the n-th EM
// iteration; runs the fixed count (optionally stopping early when successive
// estimates move less than early_stop_eps in every coordinate).
EmTrace run_em(const ObservationSet& obs, const EmConfig& config);

}  // namespace sglde

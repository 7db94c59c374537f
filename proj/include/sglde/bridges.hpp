#pragma once

#include <span>
#include <utility>
#include <vector>

#include "sglde/rng.hpp"
#include "sglde/types.hpp"

namespace sglde {

// One bridge-sampling task: pin the SGLDE at (a, b) over subgrid, which spans
// a single inter-observation interval.
struct BridgeRequest {
    Params params;
    double a;
    double b;
    TimeGrid subgrid;
    int max_attempts = 50;
    int n_bridges = 100;  // N, the Monte-Carlo ensemble size

    BridgeRequest(Params p, double a_, double b_, TimeGrid g, int attempts = 50, int n = 100)
        : params(p), a(a_), b(b_), subgrid(g), max_attempts(attempts), n_bridges(n) {
        if (!(a > 0.0) || !(b > 0.0)) throw domain_error("BridgeRequest: endpoints must be > 0");
        if (subgrid.n() < 2) throw domain_error("BridgeRequest: n_sub must be >= 2");
        if (max_attempts < 1) throw domain_error("BridgeRequest: max_attempts must be >= 1");
        if (n_bridges < 1) throw domain_error("BridgeRequest: n_bridges must be >= 1");
    }
};

enum class BridgeMethod { crossing, fallback };

struct Bridge {
    Path path;          // endpoints pinned to (a, b) exactly
    int attempts_used;
    BridgeMethod method;
};

// Crossing construction: a forward path from a and an independent forward
// path from b (time-reversed; the reversed dynamics are approximated by the
// same SGLDE, the standard simplification for ergodic diffusions). If the
// two cross, the concatenation at the first crossing is the bridge; retries
// draw fresh noise. After max_attempts the fallback returns log-linear
// interpolation plus a sigma-scaled Brownian bridge in log space.
Bridge sample_bridge(const BridgeRequest& request, RngSeed seed);

// Pointwise arithmetic mean over n_bridges sampled bridges (bridge j uses
// seed.with(j)); endpoints stay exactly (a, b).
Path conditional_mean_path(const BridgeRequest& request, RngSeed seed);

namespace detail {

struct BridgeScratch {
    std::vector<double> b1, b2, x1, x2;
};

// Core sampler writing into `out` (size n_sub+1); consumes draws from the
// caller's sampler. Returns (attempts_used, method).
std::pair<int, BridgeMethod> sample_bridge_into(const Params& params, double a, double b,
                                                double delta_sub, std::size_t n_sub,
                                                int max_attempts, NormalSampler& normal,
                                                BridgeScratch& scratch, std::span<double> out);

}  // namespace detail

}  // namespace sglde

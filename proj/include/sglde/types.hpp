#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sglde {

// Error hierarchy. Numerical routines throw; callers that need soft failure
// (EM initialization, experiment replication loops) catch and flag.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class domain_error : public error {
public:
    using error::error;
};

// Root bracketing failed: g has no sign change on [lo, hi].
class no_root_error : public error {
public:
    using error::error;
};

// Iteration budget exhausted; carries the best iterate seen.
class convergence_error : public error {
public:
    convergence_error(const std::string& msg, double best, double residual)
        : error(msg), best_iterate(best), best_residual(residual) {}
    double best_iterate;
    double best_residual;
};

class degenerate_path_error : public error {
public:
    using error::error;
};

// Parameter triple for dX = alpha X (1 - X^m) dt + sigma X dB, carrying
// capacity fixed at K = 1 after rescaling.
struct Params {
    double alpha;
    double m;
    double sigma;
    static constexpr double K = 1.0;

    Params(double alpha_, double m_, double sigma_)
        : alpha(alpha_), m(m_), sigma(sigma_) {
        if (!std::isfinite(alpha) || !std::isfinite(m) || !std::isfinite(sigma))
            throw domain_error("Params: non-finite value");
        if (alpha <= 0.0) throw domain_error("Params: alpha must be > 0");
        if (m <= 0.0) throw domain_error("Params: m must be > 0");
        if (sigma < 0.0) throw domain_error("Params: sigma must be >= 0");
    }
};

// Drift parameter pair, the theta of the Girsanov likelihood ratio.
struct Theta {
    double alpha;
    double m;
};

// Uniform mesh on [t0, T] with n steps; delta = (T - t0)/n exactly.
class TimeGrid {
public:
    TimeGrid(double t0, double T, std::size_t n)
        : t0_(t0), T_(T), n_(n), delta_((T - t0) / static_cast<double>(n)) {
        if (!std::isfinite(t0) || !std::isfinite(T))
            throw domain_error("TimeGrid: non-finite endpoint");
        if (n < 1) throw domain_error("TimeGrid: n must be >= 1");
        if (!(T > t0)) throw domain_error("TimeGrid: requires T > t0");
    }

    double t0() const { return t0_; }
    double T() const { return T_; }
    std::size_t n() const { return n_; }
    double delta() const { return delta_; }
    double time(std::size_t i) const { return t0_ + static_cast<double>(i) * delta_; }

    std::vector<double> times() const {
        std::vector<double> out(n_ + 1);
        for (std::size_t i = 0; i <= n_; ++i) out[i] = time(i);
        out[n_] = T_;
        return out;
    }

    bool operator==(const TimeGrid& o) const {
        return t0_ == o.t0_ && T_ == o.T_ && n_ == o.n_;
    }

private:
    double t0_, T_;
    std::size_t n_;
    double delta_;
};

// Strictly positive trajectory on a uniform grid.
struct Path {
    TimeGrid grid;
    std::vector<double> values;  // length grid.n() + 1

    Path(TimeGrid g, std::vector<double> v) : grid(g), values(std::move(v)) {
        if (values.size() != grid.n() + 1)
            throw domain_error("Path: values length must be n+1");
        for (std::size_t i = 0; i < values.size(); ++i)
            if (!(values[i] > 0.0) || !std::isfinite(values[i]))
                throw domain_error("Path: non-positive value at index " + std::to_string(i));
    }

    double x0() const { return values.front(); }
};

// Standard Brownian motion sampled on a grid, values[0] = 0.
struct BrownianPath {
    TimeGrid grid;
    std::vector<double> values;  // length grid.n() + 1
};

// Sparse, time-stamped records; gaps need not be uniform. First/last
// records delimit the observation window.
struct ObservationSet {
    std::vector<double> times;   // strictly increasing, size k+1 with k >= 1
    std::vector<double> values;  // positive, same size

    ObservationSet(std::vector<double> t, std::vector<double> v)
        : times(std::move(t)), values(std::move(v)) {
        if (times.size() != values.size())
            throw domain_error("ObservationSet: times/values size mismatch");
        if (times.size() < 2)
            throw domain_error("ObservationSet: needs at least 2 records (k >= 1)");
        for (std::size_t i = 0; i < times.size(); ++i) {
            if (!std::isfinite(times[i]))
                throw domain_error("ObservationSet: non-finite time at index " + std::to_string(i));
            if (!(values[i] > 0.0) || !std::isfinite(values[i]))
                throw domain_error("ObservationSet: non-positive value at index " + std::to_string(i));
            if (i > 0 && !(times[i] > times[i - 1]))
                throw domain_error("ObservationSet: times not strictly increasing at index " +
                                   std::to_string(i));
        }
    }

    std::size_t gaps() const { return times.size() - 1; }
};

// Non-uniform sampled trajectory (times, values); what EM assembles when
// observation gaps differ. A Path converts losslessly.
struct Series {
    std::vector<double> times;
    std::vector<double> values;

    Series() = default;
    Series(std::vector<double> t, std::vector<double> v)
        : times(std::move(t)), values(std::move(v)) {}
    explicit Series(const Path& p) : times(p.grid.times()), values(p.values) {}
};

}  // namespace sglde

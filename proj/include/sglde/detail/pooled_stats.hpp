#pragma once

#include <cmath>
#include <span>
#include <vector>

#include "sglde/types.hpp"

namespace sglde::detail {

// Pooled ensemble statistics for the EM M-step. Each appended segment
// contributes its trapezoid dt-weights and left-endpoint Ito increments,
// scaled by the ensemble weight (1/N per gap), so eval(m) returns the
// Monte-Carlo conditional expectations of the four integrals entering the
// alpha/m estimator formulas. The fused single-pass evaluation uses the same
// discretization as score_m (a unit test pins the agreement); the fusion
// exists because the M-step evaluates the score dozens of times per
// iteration over millions of pooled points.
class PooledStats {
public:
    void reserve(std::size_t points) {
        v_.reserve(points);
        lv_.reserve(points);
        w_.reserve(points);
        dx_.reserve(points);
    }

    void append_segment(std::span<const double> x, double delta, double weight) {
        const std::size_t n = x.size() - 1;
        for (std::size_t j = 0; j <= n; ++j) {
            v_.push_back(x[j]);
            lv_.push_back(std::log(x[j]));
            w_.push_back(weight * delta * ((j == 0 || j == n) ? 0.5 : 1.0));
            dx_.push_back(j < n ? weight * (x[j + 1] - x[j]) : 0.0);
        }
    }

    struct Integrals {
        double D;  // E int (1-X^m)^2 dt
        double A;  // E int X^{m-1} (-ln X) dX
        double I;  // E int (1-X^m)/X dX
        double B;  // E int X^m (1-X^m)(-ln X) dt
    };

    Integrals eval(double m) const {
        Integrals s{0.0, 0.0, 0.0, 0.0};
        const std::size_t n = v_.size();
        for (std::size_t j = 0; j < n; ++j) {
            const double xm = std::exp(m * lv_[j]);
            const double one = 1.0 - xm;
            s.D += w_[j] * one * one;
            s.B += w_[j] * xm * one * -lv_[j];
            s.I += dx_[j] * one / v_[j];
            s.A += dx_[j] * xm / v_[j] * -lv_[j];
        }
        return s;
    }

    double score(double m) const {
        const Integrals s = eval(m);
        return s.D * s.A - s.I * s.B;
    }

    double alpha_at(double m) const {
        const Integrals s = eval(m);
        if (s.D < 1e-300)
            throw degenerate_path_error("PooledStats: ensemble pinned at equilibrium");
        return s.I / s.D;
    }

    std::size_t size() const { return v_.size(); }

private:
    std::vector<double> v_, lv_, w_, dx_;
};

}  // namespace sglde::detail

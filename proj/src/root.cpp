#include "sglde/root.hpp"

#include <algorithm>
#include <cmath>

#include "sglde/types.hpp"

namespace sglde {

RootResult find_root_safeguarded(const std::function<double(double)>& g, double lo, double hi,
                                 double tol, int max_iter, double x0) {
    if (!(lo < hi)) throw domain_error("find_root_safeguarded: requires lo < hi");
    double glo = g(lo);
    double ghi = g(hi);
    if (glo == 0.0) return {lo, 0.0, 0, true};
    if (ghi == 0.0) return {hi, 0.0, 0, true};
    if (std::signbit(glo) == std::signbit(ghi))
        throw no_root_error("no sign change on bracket [" + std::to_string(lo) + ", " +
                            std::to_string(hi) + "]");

    double x = (x0 > lo && x0 < hi) ? x0 : 0.5 * (lo + hi);
    double gx = g(x);
    double best_x = x;
    double best_g = std::abs(gx);

    for (int it = 1; it <= max_iter; ++it) {
        if (std::abs(gx) <= tol) return {x, std::abs(gx), it, true};
        // shrink bracket around the sign change
        if (std::signbit(gx) == std::signbit(glo)) {
            lo = x;
            glo = gx;
        } else {
            hi = x;
            ghi = gx;
        }
        if (hi - lo <= tol) {
            const double mid = 0.5 * (lo + hi);
            const double gm = g(mid);
            return {mid, std::abs(gm), it, true};
        }

        const double h = 1e-6 * std::max(1.0, std::abs(x));
        const double deriv = (g(x + h) - g(x - h)) / (2.0 * h);
        double next;
        if (std::abs(deriv) < 1e-14 || !std::isfinite(deriv)) {
            next = 0.5 * (lo + hi);  // bisection fallback
        } else {
            next = x - gx / deriv;
            if (!(next > lo) || !(next < hi) || !std::isfinite(next))
                next = 0.5 * (lo + hi);
        }
        x = next;
        gx = g(x);
        if (std::isfinite(gx) && std::abs(gx) < best_g) {
            best_g = std::abs(gx);
            best_x = x;
        }
    }
    throw convergence_error("find_root_safeguarded: max_iter (" + std::to_string(max_iter) +
                                ") exceeded; best residual " + std::to_string(best_g),
                            best_x, best_g);
}

}  // namespace sglde

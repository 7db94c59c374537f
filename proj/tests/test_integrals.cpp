#include <doctest.h>

#include <cmath>
#include <string>
#include <vector>

#include "sglde/integrals.hpp"
#include "sglde/rng.hpp"
#include "sglde/simulate.hpp"
#include "sglde/types.hpp"

using namespace sglde;

namespace {

Path make_test_path() {
    const TimeGrid grid(0.0, 10.0, 5000);
    const Params params(1.0, 2.0, 0.05);
    return simulate_exact(params, 0.05, grid, sample_brownian(grid, RngSeed{5150, 0}));
}

}  // namespace

TEST_SUITE_BEGIN("integrals");

TEST_CASE("ito of f = 1 telescopes to X_n - X_0") {
    const Path p = make_test_path();
    const double v = ito_integral(p, [](double) { return 1.0; });
    CHECK(v == doctest::Approx(p.values.back() - p.values.front()).epsilon(1e-12));
}

TEST_CASE("ito of f(x) = x on [1, 2, 4] is 5 by hand") {
    const std::vector<double> x{1.0, 2.0, 4.0};
    CHECK(ito_integral(std::span<const double>(x), [](double v) { return v; }) == 5.0);
}

TEST_CASE("ito of f(x) = 1/x matches an independent brute-force loop") {
    const Path p = make_test_path();
    // oracle: plain accumulation written independently of the library helper
    double oracle = 0.0;
    for (std::size_t i = 1; i < p.values.size(); ++i)
        oracle += (1.0 / p.values[i - 1]) * (p.values[i] - p.values[i - 1]);
    const double lib = ito_integral(p, [](double v) { return 1.0 / v; });
    CHECK(lib == doctest::Approx(oracle).epsilon(1e-12));
}

TEST_CASE("lebesgue of f = 1 over [0, 10] is the horizon") {
    const Path p = make_test_path();
    CHECK(lebesgue_integral(p, [](double) { return 1.0; }) == doctest::Approx(10.0).epsilon(1e-12));
}

TEST_CASE("lebesgue of x^2 on a constant path is c^2 (T - t0)") {
    const TimeGrid g(2.0, 5.0, 300);
    const Path p(g, std::vector<double>(301, 0.25));
    CHECK(lebesgue_integral(p, [](double v) { return v * v; }) ==
          doctest::Approx(0.0625 * 3.0).epsilon(1e-12));
}

TEST_CASE("lebesgue matches an independent trapezoid oracle") {
    const Path p = make_test_path();
    auto f = [](double v) { return std::log(v) * v; };
    const double d = p.grid.delta();
    double oracle = 0.0;
    for (std::size_t i = 1; i < p.values.size(); ++i)
        oracle += 0.5 * d * (f(p.values[i - 1]) + f(p.values[i]));
    CHECK(lebesgue_integral(p, f) == doctest::Approx(oracle).epsilon(1e-12));
}

TEST_CASE("non-uniform lebesgue uses per-gap widths") {
    const std::vector<double> t{0.0, 1.0, 4.0};
    const std::vector<double> x{2.0, 2.0, 2.0};
    CHECK(lebesgue_integral(std::span<const double>(t), std::span<const double>(x),
                            [](double v) { return v; }) == doctest::Approx(8.0));
}

TEST_CASE("non-finite integrand aborts with the offending index") {
    const std::vector<double> x{1.0, 2.0, 3.0};
    auto bad = [](double v) { return 1.0 / (v - 2.0); };  // infinite at index 1
    CHECK_THROWS_WITH_AS(
        (void)lebesgue_integral(std::span<const double>(x), std::span<const double>(x), bad),
        doctest::Contains("index 1"), domain_error);
    CHECK_THROWS_AS((void)ito_integral(std::span<const double>(x), bad), domain_error);
}

TEST_CASE("quadratic variation sums squared increments") {
    const std::vector<double> x{1.0, 3.0, 2.0};
    CHECK(quadratic_variation(std::span<const double>(x)) == doctest::Approx(5.0));
    const Path p = make_test_path();
    double oracle = 0.0;
    for (std::size_t i = 1; i < p.values.size(); ++i) {
        const double d = p.values[i] - p.values[i - 1];
        oracle += d * d;
    }
    CHECK(quadratic_variation(p) == doctest::Approx(oracle).epsilon(1e-12));
}

TEST_SUITE_END();

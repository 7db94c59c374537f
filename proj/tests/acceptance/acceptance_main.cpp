// Acceptance suite: one pass/fail line per criterion, exit 0 only if all
// pass. Scale knob: SGLDE_ACCEPT_SCALE=desk (default) or ci; ci runs the
// incomplete-data reproduction at R=25 with the correspondingly widened
// thresholds (10% / 40% instead of 5% / 25%).
//
// Criteria:
//   1. complete-data table reproduction, Cases 1-4, R=200
//   2. incomplete-data (EM) table reproduction, Cases 1 and 3, 10% and 1%
//   3. consistency in T: median errors nonincreasing over {2.5, 5, 10}
//   4. noiseless oracle: closed form vs Richards; Euler error halving
//   5. root correctness vs brute-force scan+bisection
//   6. likelihood lattice argmax at the MLE
//   7. appendix sign invariants and mean-zero mixed integrals
//   8. bridge contract: pinning, positivity, 1/sqrt(N) shrinkage
//   9. byte-identical artifacts on re-run

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <limits>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "sglde/bridges.hpp"
#include "sglde/em.hpp"
#include "sglde/estimators.hpp"
#include "sglde/experiment.hpp"
#include "sglde/parallel.hpp"
#include "sglde/simulate.hpp"
#include "sglde/types.hpp"

using namespace sglde;

namespace {

int g_failures = 0;

void report(int criterion, bool pass, const std::string& detail) {
    std::printf("[%s] criterion %d: %s\n", pass ? "PASS" : "FAIL", criterion, detail.c_str());
    std::fflush(stdout);
    if (!pass) ++g_failures;
}

struct CaseSpec {
    const char* name;
    double alpha, m, sigma;
    double m_lo, m_hi;
    // published complete-data reference: PE, 95Q and MSE per parameter
    double pe_alpha, q_alpha_lo, q_alpha_hi, mse_alpha;
    double pe_sigma, mse_sigma;
    double pe_m, q_m_lo, q_m_hi, mse_m;
};

const CaseSpec kCases[] = {
    {"case1", 0.7, 0.6, 0.01, 0.51, 5.0,
     0.700888, 0.657515, 0.752729, 6.1e-4,
     0.011282, 8.5e-9,
     0.600990, 0.531013, 0.671848, 1.3e-3},
    {"case2", 0.9, 1.0, 0.01, 0.51, 8.0,
     0.901989, 0.874677, 0.933052, 2.1e-4,
     0.011247, 5.8e-9,
     0.997121, 0.925817, 1.070707, 1.3e-3},
    {"case3", 1.0, 2.0, 0.05, 0.51, 10.0,
     1.003503, 0.920568, 1.090649, 1.9e-3,
     0.050373, 1.6e-7,
     2.048797, 1.518122, 2.748484, 1.0e-1},
    {"case4", 2.5, 15.0, 0.01, 1.0, 30.0,
     2.501108, 2.482557, 2.519105, 8.5e-5,
     0.014972, 3.1e-9,
     15.02419, 14.03143, 16.22140, 3.0e-1},
};

// EM reference values (EMPE / MSE), Cases 1 and 3 at 10% and 1%
struct EmCell {
    double fraction;
    double empe_alpha, empe_sigma, empe_m;
    double mse_sigma;
};
struct EmCaseSpec {
    const CaseSpec* base;
    EmCell cells[2];
};
const EmCaseSpec kEmCases[] = {
    {&kCases[0],
     {{0.1, 0.700923, 0.010032, 0.600778, 7.9e-8},
      {0.01, 0.701065, 0.009341, 0.600505, 6.9e-7}}},
    {&kCases[2],
     {{0.1, 1.006274, 0.047267, 2.015839, 1.4e-6},
      {0.01, 1.008769, 0.041388, 1.976043, 1.3e-5}}},
};

Path simulate_at(const CaseSpec& cs, std::uint64_t master, std::size_t rep,
                 std::size_t n = 10000, double T = 10.0) {
    const TimeGrid grid(0.0, T, n);
    return simulate_exact(Params(cs.alpha, cs.m, cs.sigma), 0.05, grid,
                          sample_brownian(grid, RngSeed{master, rep}));
}

std::string fnum(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", x);
    return buf;
}

// ---------------------------------------------------------------- criterion 1

void criterion1_table1() {
    bool all = true;
    std::string detail = "Table 1 desk scale (R=200):";
    for (const CaseSpec& cs : kCases) {
        const int R = 200;
        std::vector<ThetaEstimate> est(R);
        std::vector<int> ok(R, 0);
        parallel_for(R, 0, [&](std::size_t r) {
            const Path p = simulate_at(cs, 101, r);
            JointOptions opts;
            opts.bracket = MBracket{cs.m_lo, cs.m_hi};
            try {
                est[r] = estimate_joint(p, opts);
                ok[r] = 1;
            } catch (const error&) {
            }
        });
        double a = 0.0, m = 0.0, s = 0.0, mse_a = 0.0, mse_m = 0.0, mse_s = 0.0;
        int n = 0;
        for (int r = 0; r < R; ++r) {
            if (!ok[r]) continue;
            ++n;
            a += est[r].alpha;
            m += est[r].m;
            s += est[r].sigma;
            mse_a += (est[r].alpha - cs.alpha) * (est[r].alpha - cs.alpha);
            mse_m += (est[r].m - cs.m) * (est[r].m - cs.m);
            mse_s += (est[r].sigma - cs.sigma) * (est[r].sigma - cs.sigma);
        }
        a /= n; m /= n; s /= n;
        mse_a /= n; mse_m /= n; mse_s /= n;
        // The published sigma "MSE" column is the dispersion about the
        // ensemble mean: the published PE's own squared bias against sigma_0
        // exceeds the column by orders of magnitude (e.g. 1.6e-6 vs 8.5e-9
        // in the first case), so variance is the like-for-like comparison.
        const double var_s = mse_s - (s - cs.sigma) * (s - cs.sigma);
        const bool pass = n >= R * 95 / 100 &&
                          a > cs.q_alpha_lo && a < cs.q_alpha_hi &&
                          m > cs.q_m_lo && m < cs.q_m_hi &&
                          std::abs(s - cs.pe_sigma) <= 0.20 * cs.pe_sigma &&
                          mse_a <= 3.0 * cs.mse_alpha && mse_m <= 3.0 * cs.mse_m &&
                          var_s <= 3.0 * cs.mse_sigma;
        all = all && pass;
        detail += std::string(" ") + cs.name + (pass ? " ok" : " FAIL") + " (a=" + fnum(a) +
                  " m=" + fnum(m) + " s=" + fnum(s) + ")";
    }
    report(1, all, detail);
}

// ---------------------------------------------------------------- criterion 2

void criterion2_table2(bool ci_scale) {
    const int R = ci_scale ? 25 : 100;
    const double tol_drift = ci_scale ? 0.10 : 0.05;
    const double tol_sigma = ci_scale ? 0.40 : 0.25;
    bool all = true;
    std::string detail = "Table 2 " + std::string(ci_scale ? "CI" : "desk") +
                         " scale (R=" + std::to_string(R) + "):";
    for (const EmCaseSpec& ec : kEmCases) {
        const CaseSpec& cs = *ec.base;
        std::array<std::vector<ThetaEstimate>, 2> finals;
        std::array<std::vector<int>, 2> ok;
        for (int f = 0; f < 2; ++f) {
            finals[f].resize(R);
            ok[f].assign(R, 0);
        }
        parallel_for(R, 0, [&](std::size_t r) {
            const Path p = simulate_at(cs, 202, r);
            for (int f = 0; f < 2; ++f) {
                const ObservationSet obs = subsample(p, ec.cells[f].fraction);
                EmConfig cfg;
                cfg.iterations = 10;
                cfg.n_bridges = 100;
                cfg.m_bracket = MBracket{cs.m_lo, cs.m_hi};
                cfg.seed = RngSeed{202, r}.with(1000 + static_cast<std::uint64_t>(f));
                cfg.reconstruct_points = 10000;
                try {
                    const EmTrace trace = run_em(obs, cfg);
                    finals[f][r] = trace.back().theta;
                    ok[f][r] = 1;
                } catch (const error&) {
                }
            }
        });
        double mse_sigma_cells[2] = {0.0, 0.0};
        for (int f = 0; f < 2; ++f) {
            const EmCell& cell = ec.cells[f];
            double a = 0.0, m = 0.0, s = 0.0, mse_s = 0.0;
            int n = 0;
            for (int r = 0; r < R; ++r) {
                if (!ok[f][r]) continue;
                ++n;
                a += finals[f][r].alpha;
                m += finals[f][r].m;
                s += finals[f][r].sigma;
                mse_s += (finals[f][r].sigma - cs.sigma) * (finals[f][r].sigma - cs.sigma);
            }
            a /= n; m /= n; s /= n; mse_s /= n;
            mse_sigma_cells[f] = mse_s;
            const bool pass = n >= R * 95 / 100 &&
                              std::abs(a - cell.empe_alpha) <= tol_drift * cell.empe_alpha &&
                              std::abs(m - cell.empe_m) <= tol_drift * cell.empe_m &&
                              std::abs(s - cell.empe_sigma) <= tol_sigma * cell.empe_sigma;
            all = all && pass;
            detail += std::string(" ") + cs.name + "/" + (f == 0 ? "10%" : "1%") +
                      (pass ? " ok" : " FAIL") + " (a=" + fnum(a) + " m=" + fnum(m) +
                      " s=" + fnum(s) + ")";
        }
        const bool ordering = mse_sigma_cells[1] >= mse_sigma_cells[0];
        all = all && ordering;
        detail += std::string(" sigma-MSE(1%)>=(10%): ") + (ordering ? "ok" : "FAIL");
    }
    report(2, all, detail);
}

// ---------------------------------------------------------------- criterion 3

void criterion3_consistency() {
    const int R = 200;
    const std::array<std::size_t, 3> cut{2500, 5000, 10000};
    std::array<std::vector<double>, 3> err_a, err_m;
    for (int h = 0; h < 3; ++h) {
        err_a[h].assign(R, std::numeric_limits<double>::infinity());
        err_m[h].assign(R, std::numeric_limits<double>::infinity());
    }
    parallel_for(R, 0, [&](std::size_t r) {
        const Path p = simulate_at(kCases[2], 303, r);
        for (int h = 0; h < 3; ++h) {
            const std::size_t idx = cut[h];
            const TimeGrid sub(0.0, p.grid.time(idx), idx);
            const Path prefix(sub, std::vector<double>(p.values.begin(),
                                                       p.values.begin() +
                                                           static_cast<std::ptrdiff_t>(idx) + 1));
            JointOptions opts;
            opts.bracket = MBracket{0.51, 10.0};
            try {
                const ThetaEstimate e = estimate_joint(prefix, opts);
                err_a[h][r] = std::abs(e.alpha - 1.0);
                err_m[h][r] = std::abs(e.m - 2.0);
            } catch (const error&) {
            }
        }
    });
    auto median = [](std::vector<double> v) {
        std::sort(v.begin(), v.end());
        return v[v.size() / 2];
    };
    // Bootstrap standard error of the difference of adjacent-horizon medians
    // (paired resampling). The m-information saturates once the path sits at
    // the carrying capacity, so adjacent medians can tie; "nonincreasing"
    // admits an increase only when it is not statistically significant.
    auto boot_se_diff = [&median](const std::vector<double>& lo, const std::vector<double>& hi) {
        std::mt19937_64 rng(12345);
        const std::size_t n = lo.size();
        std::vector<double> a(n), b(n), diffs;
        for (int rep = 0; rep < 400; ++rep) {
            for (std::size_t i = 0; i < n; ++i) {
                const std::size_t j = rng() % n;
                a[i] = lo[j];
                b[i] = hi[j];
            }
            diffs.push_back(median(b) - median(a));
        }
        double s = 0.0, q = 0.0;
        for (double d : diffs) {
            s += d;
            q += d * d;
        }
        const double mean = s / diffs.size();
        return std::sqrt(q / diffs.size() - mean * mean);
    };
    auto chain_ok = [&](std::array<std::vector<double>, 3>& err) {
        const double m0 = median(err[0]), m1 = median(err[1]), m2 = median(err[2]);
        const bool strict_gain = m1 < m0 && m2 < m0;
        const bool adj1 = m1 <= m0 + 3.0 * boot_se_diff(err[0], err[1]);
        const bool adj2 = m2 <= m1 + 3.0 * boot_se_diff(err[1], err[2]);
        return strict_gain && adj1 && adj2;
    };
    const bool pass = chain_ok(err_a) && chain_ok(err_m);
    const double ma[3] = {median(err_a[0]), median(err_a[1]), median(err_a[2])};
    const double mm[3] = {median(err_m[0]), median(err_m[1]), median(err_m[2])};
    report(3, pass,
           "median |err| over T in {2.5,5,10}: alpha (" + fnum(ma[0]) + ", " + fnum(ma[1]) + ", " +
               fnum(ma[2]) + "), m (" + fnum(mm[0]) + ", " + fnum(mm[1]) + ", " + fnum(mm[2]) +
               ") nonincreasing up to median noise");
}

// ---------------------------------------------------------------- criterion 4

void criterion4_noiseless() {
    const TimeGrid grid(0.0, 10.0, 10000);  // delta = 1e-3
    const auto brownian = sample_brownian(grid, RngSeed{404, 0});
    double max_err = 0.0;
    for (const CaseSpec& cs : {kCases[0], kCases[2]}) {
        const Path p = simulate_exact(Params(cs.alpha, cs.m, 0.0), 0.05, grid, brownian);
        for (std::size_t i = 0; i <= grid.n(); ++i)
            max_err = std::max(max_err,
                               std::abs(p.values[i] - deterministic_solution(cs.alpha, cs.m, 1.0,
                                                                             0.05, 0.0,
                                                                             grid.time(i))));
    }
    const bool closed_ok = max_err <= 1e-6;

    auto euler_err = [](std::size_t n) {
        const TimeGrid g(0.0, 10.0, n);
        const Path p = simulate_euler(Params(1.0, 1.0, 0.0), 0.5, g,
                                      sample_brownian(g, RngSeed{404, 1}));
        double err = 0.0;
        for (std::size_t i = 0; i <= n; ++i)
            err = std::max(err, std::abs(p.values[i] - deterministic_solution(1.0, 1.0, 1.0, 0.5,
                                                                              0.0, g.time(i))));
        return err;
    };
    const double e1 = euler_err(1000), e2 = euler_err(2000);
    const double ratio = e2 / e1;
    const bool euler_ok = ratio >= 0.4 && ratio <= 0.6;
    report(4, closed_ok && euler_ok,
           "closed-form vs Richards max err = " + fnum(max_err) +
               " (<=1e-6); Euler halving ratio = " + fnum(ratio) + " (in [0.4, 0.6])");
}

// ---------------------------------------------------------------- criterion 5

// independent fused score evaluation for the brute-force oracle
struct OracleScore {
    std::vector<double> x, lx;
    double delta;
    explicit OracleScore(const Path& p) : x(p.values), delta(p.grid.delta()) {
        lx.resize(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) lx[i] = std::log(x[i]);
    }
    double g(double m) const {
        const std::size_t n = x.size() - 1;
        double D = 0.0, A = 0.0, I = 0.0, B = 0.0, prev_d = 0.0, prev_b = 0.0;
        for (std::size_t i = 0; i <= n; ++i) {
            const double xm = std::exp(m * lx[i]);
            const double one = 1.0 - xm;
            const double td = one * one;
            const double tb = xm * one * -lx[i];
            if (i > 0) {
                D += 0.5 * delta * (prev_d + td);
                B += 0.5 * delta * (prev_b + tb);
            }
            if (i < n) {
                const double dx = x[i + 1] - x[i];
                A += xm / x[i] * -lx[i] * dx;
                I += one / x[i] * dx;
            }
            prev_d = td;
            prev_b = tb;
        }
        return D * A - I * B;
    }
    double root(double lo, double hi, double step) const {
        double pm = lo, pg = g(lo);
        for (double m = lo + step; m <= hi + 0.5 * step; m += step) {
            const double gm = g(m);
            if ((pg < 0.0) != (gm < 0.0) || gm == 0.0) {
                double a = pm, b = m, ga = pg;
                for (int it = 0; it < 80; ++it) {
                    const double mid = 0.5 * (a + b);
                    if ((ga < 0.0) == (g(mid) < 0.0)) {
                        a = mid;
                        ga = g(mid);
                    } else {
                        b = mid;
                    }
                }
                return 0.5 * (a + b);
            }
            pm = m;
            pg = gm;
        }
        return std::numeric_limits<double>::quiet_NaN();
    }
};

void criterion5_roots() {
    const int R = 100;
    std::vector<int> agree(R, 0), residual_ok(R, 0);
    parallel_for(R, 0, [&](std::size_t r) {
        const Path p = simulate_at(kCases[2], 505, r);
        RootResult rep{};
        const double newton = estimate_m(p, MBracket{0.51, 10.0}, 1e-8, 100, &rep);
        const OracleScore oracle(p);
        const double brute = oracle.root(0.51, 10.0, 1e-2);
        agree[r] = std::isfinite(brute) && std::abs(newton - brute) <= 1e-3 ? 1 : 0;
        residual_ok[r] = !rep.converged || std::abs(score_m(p, newton)) <= 1e-8 ? 1 : 0;
    });
    int n_agree = 0, n_resid = 0;
    for (int r = 0; r < R; ++r) {
        n_agree += agree[r];
        n_resid += residual_ok[r];
    }
    report(5, n_agree == R && n_resid == R,
           "oracle agreement " + std::to_string(n_agree) + "/100 within 1e-3; residual <= 1e-8 on " +
               std::to_string(n_resid) + "/100");
}

// ---------------------------------------------------------------- criterion 6

void criterion6_lattice() {
    const int R = 50;
    std::vector<int> centered(R, 0);
    parallel_for(R, 0, [&](std::size_t r) {
        const Path p = simulate_at(kCases[2], 606, r, 5000);
        JointOptions opts;
        opts.bracket = MBracket{0.51, 10.0};
        ThetaEstimate est;
        try {
            est = estimate_joint(p, opts);
        } catch (const error&) {
            return;
        }
        const Theta truth{1.0, 2.0};
        double best = -std::numeric_limits<double>::infinity();
        int bi = -99, bj = -99;
        for (int i = -10; i <= 10; ++i) {
            for (int j = -10; j <= 10; ++j) {
                const Theta t{est.alpha * (1.0 + 0.01 * i), est.m * (1.0 + 0.01 * j)};
                const double ll = log_likelihood_ratio(p, t, truth, est.sigma);
                if (ll > best) {
                    best = ll;
                    bi = i;
                    bj = j;
                }
            }
        }
        centered[r] = (bi == 0 && bj == 0) ? 1 : 0;
    });
    int n = 0;
    for (int c : centered) n += c;
    report(6, n >= 45, "lattice argmax at the MLE on " + std::to_string(n) + "/50 paths (need 45)");
}

// ---------------------------------------------------------------- criterion 7

void criterion7_appendix() {
    // Sign facts on 1000 in-range paths. Paths whose score root falls below
    // the documented m <= 0.51 bracket edge (under 2%) carry no m_hat and are
    // excluded from the sign count, never silently passed.
    const int R = 1000;
    const int R_mean = 500;  // the mean-zero check runs at the example's ensemble size
    std::vector<int> status(R, 0);  // 0 = estimable+ok, 1 = violation, 2 = no root, 3 = out of range
    std::vector<double> j1v(R, 0.0), j2v(R, 0.0);
    parallel_for(R, 0, [&](std::size_t r) {
        const Path p = simulate_at(kCases[0], 2707, r);
        if (exceeds_carrying_capacity(p.values)) {
            status[r] = 3;
            return;
        }
        double m_hat;
        try {
            m_hat = estimate_m(p, MBracket{0.51, 5.0});
        } catch (const error&) {
            status[r] = 2;
            return;
        }
        const ConsistencyDiagnostics d = consistency_diagnostics(p, m_hat, 0.7, 0.6, 0.01);
        status[r] = (d.J1 < 0.0 && d.J2 > 0.0 && d.J3 < 0.0) ? 0 : 1;
        j1v[r] = d.calJ1;
        j2v[r] = d.calJ2;
    });
    int n_ok = 0, n_viol = 0, n_noroot = 0, n_out = 0;
    double s1 = 0.0, s2 = 0.0, q1 = 0.0, q2 = 0.0;
    int n_mean = 0;
    for (int r = 0; r < R; ++r) {
        switch (status[r]) {
            case 0: ++n_ok; break;
            case 1: ++n_viol; break;
            case 2: ++n_noroot; break;
            default: ++n_out; break;
        }
        if (status[r] <= 1 && n_mean < R_mean) {
            ++n_mean;
            s1 += j1v[r];
            s2 += j2v[r];
            q1 += j1v[r] * j1v[r];
            q2 += j2v[r] * j2v[r];
        }
    }
    const double mean1 = s1 / n_mean, mean2 = s2 / n_mean;
    const double se1 = std::sqrt((q1 / n_mean - mean1 * mean1) / n_mean);
    const double se2 = std::sqrt((q2 / n_mean - mean2 * mean2) / n_mean);
    const bool pass = n_viol == 0 && n_noroot <= R / 50 && n_out == 0 &&
                      std::abs(mean1) <= 3.0 * se1 && std::abs(mean2) <= 3.0 * se2;
    report(7, pass,
           "J-sign violations " + std::to_string(n_viol) + "/" + std::to_string(n_ok + n_viol) +
               " (no-root " + std::to_string(n_noroot) + "); |mean|/se at " +
               std::to_string(n_mean) + " seeds: calJ1 " + fnum(std::abs(mean1) / se1) +
               ", calJ2 " + fnum(std::abs(mean2) / se2) + " (<= 3)");
}

// ---------------------------------------------------------------- criterion 8

void criterion8_bridges() {
    // endpoint pinning and positivity over 10^4 bridges with model-consistent
    // endpoint pairs
    const TimeGrid grid(0.0, 10.0, 10000);
    const Params params(0.4, 2.0, 0.01);
    const Path path = simulate_exact(params, 0.05, grid, sample_brownian(grid, RngSeed{808, 0}));
    const ObservationSet obs = subsample(path, 0.1);
    const int n_bridges = 10000;
    std::vector<int> ok(n_bridges, 0);
    parallel_for(n_bridges, 0, [&](std::size_t s) {
        const std::size_t gap = s % obs.gaps();
        const BridgeRequest req(params, obs.values[gap], obs.values[gap + 1],
                                TimeGrid(0.0, 0.01, 10), 50, 1);
        const Bridge br = sample_bridge(req, RngSeed{808, 1 + s});
        bool good = br.path.values.front() == obs.values[gap] &&
                    br.path.values.back() == obs.values[gap + 1];
        for (double v : br.path.values) good = good && v > 0.0;
        ok[s] = good ? 1 : 0;
    });
    int n_ok = 0;
    for (int o : ok) n_ok += o;

    // Monte-Carlo error of the conditional mean shrinks like 1/sqrt(N):
    // max pointwise gap to an independent N=10^4 reference, averaged over
    // replicates, compared between N=100 and N=10000
    const BridgeRequest base(params, obs.values[500], obs.values[501], TimeGrid(0.0, 0.01, 10), 50,
                             100);
    const int reps = 10;
    std::vector<double> gap100(reps, 0.0), gap10000(reps, 0.0);
    parallel_for(reps, 0, [&](std::size_t rep) {
        BridgeRequest ref = base;
        ref.n_bridges = 10000;
        const Path reference = conditional_mean_path(ref, RngSeed{809, 3 * rep});
        BridgeRequest small = base;
        small.n_bridges = 100;
        const Path m100 = conditional_mean_path(small, RngSeed{809, 3 * rep + 1});
        BridgeRequest big = base;
        big.n_bridges = 10000;
        const Path m10000 = conditional_mean_path(big, RngSeed{809, 3 * rep + 2});
        for (std::size_t i = 0; i < reference.values.size(); ++i) {
            gap100[rep] = std::max(gap100[rep], std::abs(m100.values[i] - reference.values[i]));
            gap10000[rep] =
                std::max(gap10000[rep], std::abs(m10000.values[i] - reference.values[i]));
        }
    });
    double e100 = 0.0, e10000 = 0.0;
    for (int rep = 0; rep < reps; ++rep) {
        e100 += gap100[rep] / reps;
        e10000 += gap10000[rep] / reps;
    }
    const double ratio = e10000 / e100;
    const bool shrink_ok = ratio >= 0.05 && ratio <= 0.2;  // within 2x of 0.1
    report(8, n_ok == n_bridges && shrink_ok,
           "pinning+positivity on " + std::to_string(n_ok) + "/10000 bridges; mean-gap ratio " +
               fnum(ratio) + " (in [0.05, 0.2])");
}

// ---------------------------------------------------------------- criterion 9

std::string slurp(const std::filesystem::path& p) {
    std::ifstream is(p, std::ios::binary);
    std::stringstream ss;
    ss << is.rdbuf();
    return ss.str();
}

void criterion9_determinism() {
    namespace fs = std::filesystem;
    const fs::path root = fs::temp_directory_path() / "sglde_accept_det";
    fs::remove_all(root);

    ExperimentConfig cc;
    cc.type = "complete";
    cc.label = "det";
    cc.alpha = 1.0;
    cc.m = 2.0;
    cc.sigma = 0.05;
    cc.grid = GridSpec{0.0, 10.0, 2000};
    cc.replications = 10;
    cc.seed = 909;
    bool pass = true;
    std::string detail = "byte-identical artifacts:";
    {
        cc.out_dir = (root / "a").string();
        run_complete_experiment(cc);
        cc.out_dir = (root / "b").string();
        run_complete_experiment(cc);
        for (const char* f : {"table1_det.csv", "estimates_det.csv"}) {
            const bool same = slurp(root / "a" / f) == slurp(root / "b" / f);
            pass = pass && same;
            detail += std::string(" ") + f + (same ? " ok" : " FAIL");
        }
    }
    {
        ExperimentConfig ic = cc;
        ic.type = "incomplete";
        ic.label = "det";
        ic.grid = GridSpec{0.0, 10.0, 1000};
        ic.replications = 4;
        ic.keep_fractions = {0.1};
        ic.em_iterations = 3;
        ic.em_n_bridges = 20;
        ic.out_dir = (root / "c").string();
        run_incomplete_experiment(ic);
        ic.out_dir = (root / "d").string();
        run_incomplete_experiment(ic);
        for (const char* f : {"table2_det.csv", "table3_det.csv", "em_trace_det_pif10.csv"}) {
            const bool same = slurp(root / "c" / f) == slurp(root / "d" / f);
            pass = pass && same;
            detail += std::string(" ") + f + (same ? " ok" : " FAIL");
        }
    }
    fs::remove_all(root);
    report(9, pass, detail);
}

}  // namespace

int main() {
    const char* scale_env = std::getenv("SGLDE_ACCEPT_SCALE");
    const bool ci_scale = scale_env != nullptr && std::strcmp(scale_env, "ci") == 0;
    std::printf("acceptance suite, scale = %s\n", ci_scale ? "ci" : "desk");

    criterion4_noiseless();
    criterion9_determinism();
    criterion5_roots();
    criterion6_lattice();
    criterion8_bridges();
    criterion3_consistency();
    criterion7_appendix();
    criterion1_table1();
    criterion2_table2(ci_scale);

    std::printf("%s: %d criterion failure(s)\n", g_failures == 0 ? "SUCCESS" : "FAILURE",
                g_failures);
    return g_failures == 0 ? 0 : 1;
}

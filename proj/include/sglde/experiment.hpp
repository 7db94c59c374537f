#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sglde/em.hpp"
#include "sglde/estimators.hpp"
#include "sglde/serialize.hpp"
#include "sglde/types.hpp"

#include <json.hpp>

namespace sglde {

struct GridSpec {
    double t0 = 0.0;
    double T = 10.0;
    std::size_t n = 10000;
};

// Batch-run description; mirrors the documented JSON config schema
// (schema_version 1). Unknown or ill-typed fields are rejected by name.
struct ExperimentConfig {
    std::string type = "complete";  // complete | consistency | incomplete
    std::string label = "run";
    double alpha = 1.0;
    double m = 2.0;
    double sigma = 0.05;
    double x0 = 0.05;
    GridSpec grid{};
    int replications = 200;
    std::vector<double> keep_fractions{0.1, 0.01};

    int em_iterations = 10;
    int em_n_bridges = 100;
    std::size_t em_reconstruct_points = 0;  // 0: match grid.n
    int em_max_attempts = 50;

    MBracket m_bracket{};
    double tol = 1e-8;
    int max_iter = 100;
    int max_outer = 5;

    std::uint64_t seed = 0;
    std::string out_dir = ".";
    unsigned threads = 0;
    std::vector<double> horizons;  // consistency horizons; empty = 40 even steps
    std::string input;             // input file for the estimate/em subcommands
    std::string format = "csv";    // csv | json
};

ExperimentConfig config_from_json(const nlohmann::json& j);
nlohmann::json config_to_json(const ExperimentConfig& c);  // canonical form
std::uint64_t config_hash(const ExperimentConfig& c);      // FNV-1a over the canonical dump
Metadata make_metadata(const ExperimentConfig& c);

// PE / 95% quantiles / MSE of one parameter across replications.
struct SummaryRow {
    std::string parameter;
    double pe;
    double q_lo;
    double q_hi;
    double mse;
};

// Empirical quantile by linear interpolation between order statistics
// (h = (n-1)p; the "type 7" rule), consistent across runs.
double quantile(std::vector<double> sample, double p);

struct CompleteResult {
    std::vector<SummaryRow> rows;  // alpha, m, sigma
    std::size_t failures = 0;
    std::vector<ThetaEstimate> estimates;  // replication order, failures skipped
};

// Experiment 1: simulate R paths with the closed-form simulator, estimate
// each, aggregate. Writes table1_<label>.csv plus the raw estimates file.
// Replication failures are excluded and counted; above 5% the run aborts.
CompleteResult run_complete_experiment(const ExperimentConfig& c);

struct ConsistencyRow {
    double T;
    double alpha_hat, m_hat, sigma_hat;
    bool valid;  // false when the score lacked a bracket at this horizon
};

// Estimates on one path restricted to growing horizons; writes
// consistency.csv and consistency_log_error.csv.
std::vector<ConsistencyRow> consistency_trace(const ExperimentConfig& c);

struct IncompleteResult {
    struct PerFraction {
        double fraction;
        std::vector<SummaryRow> rows;       // final-iteration EMPE aggregation
        std::vector<EmIterate> mean_trace;  // per-iteration averages across datasets
        std::size_t failures = 0;
        double mean_fallback = 0.0;
    };
    std::vector<PerFraction> fractions;
    std::vector<SummaryRow> complete_rows;  // CI scenario on the same datasets
};

// Experiment 2: per dataset, subsample at each fraction and run the EM;
// aggregates final estimates and per-iteration averages. Writes
// table2_<label>.csv, table3_<label>.csv (CI vs fractions), per-fraction
// em_trace files and raw finals.
IncompleteResult run_incomplete_experiment(const ExperimentConfig& c);

}  // namespace sglde

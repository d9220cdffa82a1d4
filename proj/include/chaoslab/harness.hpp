#pragma once

#include <string>
#include <vector>

#include "chaoslab/config.hpp"

namespace chaoslab {

struct SlopeOutcome {
    std::string quantity;
    double predicted = 0.0;
    int log_power = 0;
    double fitted = 0.0;
    double stderr_slope = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

struct RateReport {
    bool all_pass = true;
    std::vector<SlopeOutcome> slopes;
    std::vector<std::string> flags;  // non-fatal warnings (e.g. MC noise)
};

// Runs the n-grid of an experiment: cumulants (exact for m = 2, Monte
// Carlo otherwise), density distances for m = 2 up to density_n_cap,
// Edgeworth-corrected distances, slope fits against the predicted
// exponents. Writes cumulants.csv, distances.csv, slopes.csv and
// summary.json under out_dir.
RateReport run_rate_experiment(const ExperimentConfig& cfg, const std::string& out_dir);

// Cumulant grid only (for the `cumulants` subcommand).
void run_cumulant_grid(const ExperimentConfig& cfg, const std::string& out_dir);

// Density curves + distances only (for the `density` subcommand, m = 2).
void run_density_curves(const ExperimentConfig& cfg, const std::string& out_dir);

}  // namespace chaoslab

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace chaoslab {

// Experiment configuration, parsed from a "key = value" file (# comments,
// comma-separated lists). Unknown keys are rejected.
struct ExperimentConfig {
    int m = 2;
    double hurst = 0.5;
    double nu = 1.0;
    std::vector<std::int64_t> n_grid = {128, 256, 512, 1024, 2048, 4096, 8192};
    std::int64_t reps = 100000;
    std::uint64_t seed = 20240901;
    std::vector<std::string> norms = {"sup", "L1", "L2"};
    std::vector<int> derivative_orders = {0, 1, 2};
    std::string output_dir = "out";

    // pass/fail tolerances (defaults match the shipped verification runs)
    double slope_tol_cumulant = 0.02;
    double slope_tol_cumulant_log = 0.1;  // boundary-H cases with log removal
    double slope_tol_density = 0.05;
    double slope_tol_edgeworth = 0.1;
    std::int64_t density_n_cap = 2048;   // exact densities stop here (eigensolver cost)
    std::int64_t mc_density_n_cap = 1024;
};

ExperimentConfig parse_config_file(const std::string& path);
ExperimentConfig parse_config_text(const std::string& text);
void validate_config(const ExperimentConfig& cfg);

}  // namespace chaoslab

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "chaoslab/config.hpp"
#include "chaoslab/harness.hpp"

using namespace chaoslab;

namespace {
std::string slurp(const std::filesystem::path& p) {
    std::ifstream is(p);
    std::ostringstream os;
    os << is.rdbuf();
    return os.str();
}
}  // namespace

TEST_CASE("config parsing and validation") {
    const ExperimentConfig cfg = parse_config_text(
        "# comment\n"
        "m = 2\n"
        "hurst = 0.5\n"
        "nu = 1.0\n"
        "n_grid = 128, 256, 512, 1024\n"
        "reps = 5000\n"
        "seed = 42\n"
        "norms = sup, L1\n"
        "derivative_orders = 0, 1\n"
        "output_dir = scratch\n");
    CHECK(cfg.m == 2);
    CHECK(cfg.n_grid.size() == 4);
    CHECK(cfg.norms.size() == 2);
    CHECK(cfg.seed == 42);

    CHECK_THROWS_AS(parse_config_text("bogus_key = 1\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_config_text("m = 2\nhurst = 0.9\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_config_text("n_grid = 64, 32\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_config_text("norms = sup, L7\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_config_text("no equals sign\n"), std::invalid_argument);
}

TEST_CASE("rate experiment artifacts and determinism") {
    ExperimentConfig cfg;
    cfg.m = 2;
    cfg.hurst = 0.5;
    cfg.n_grid = {128, 256, 512, 1024};
    cfg.derivative_orders = {0};
    cfg.norms = {"sup"};
    cfg.density_n_cap = 1024;
    const auto dir1 = std::filesystem::temp_directory_path() / "chaoslab_rates_1";
    const auto dir2 = std::filesystem::temp_directory_path() / "chaoslab_rates_2";
    const RateReport r1 = run_rate_experiment(cfg, dir1.string());
    const RateReport r2 = run_rate_experiment(cfg, dir2.string());
    CHECK(r1.all_pass);

    for (const char* f : {"cumulants.csv", "distances.csv", "slopes.csv", "summary.json"}) {
        CAPTURE(f);
        CHECK(std::filesystem::exists(dir1 / f));
        CHECK(slurp(dir1 / f) == slurp(dir2 / f));  // byte-identical reruns
    }

    // the H = 1/2 slopes are exact
    bool saw_kappa3 = false;
    for (const auto& s : r1.slopes) {
        if (s.quantity == "kappa3") {
            saw_kappa3 = true;
            CHECK(s.fitted == doctest::Approx(-0.5).epsilon(1e-9));
            CHECK(s.pass);
        }
        if (s.quantity == "density_j0_sup") CHECK(s.pass);
    }
    CHECK(saw_kappa3);
    std::filesystem::remove_all(dir1);
    std::filesystem::remove_all(dir2);
}

TEST_CASE("density subcommand artifacts") {
    ExperimentConfig cfg;
    cfg.m = 2;
    cfg.hurst = 0.5;
    cfg.n_grid = {256};
    cfg.derivative_orders = {0, 1};
    cfg.norms = {"sup"};
    const auto dir = std::filesystem::temp_directory_path() / "chaoslab_density_cli";
    run_density_curves(cfg, dir.string());
    CHECK(std::filesystem::exists(dir / "density_n256_j0.csv"));
    CHECK(std::filesystem::exists(dir / "density_n256_j1.csv"));
    const std::string head = slurp(dir / "density_n256_j0.csv").substr(0, 14);
    CHECK(head == "x,value,j,H,n,");
    cfg.m = 3;
    CHECK_THROWS_AS(run_density_curves(cfg, dir.string()), std::invalid_argument);
    std::filesystem::remove_all(dir);
}

TEST_CASE("monte carlo route flags noisy grid points") {
    ExperimentConfig cfg;
    cfg.m = 3;
    cfg.hurst = 0.5;
    cfg.n_grid = {64, 128, 256, 512};
    cfg.reps = 2000;  // deliberately tiny so kappa4 drowns in noise
    const auto dir = std::filesystem::temp_directory_path() / "chaoslab_rates_mc";
    const RateReport r = run_rate_experiment(cfg, dir.string());
    CHECK(!r.flags.empty());
    std::filesystem::remove_all(dir);
}

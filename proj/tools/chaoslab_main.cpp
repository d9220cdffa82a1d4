#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "chaoslab/config.hpp"
#include "chaoslab/fgn.hpp"
#include "chaoslab/harness.hpp"
#include "chaoslab/verify.hpp"

using namespace chaoslab;

int main(int argc, char** argv) {
    CLI::App app{"chaoslab: exact and Monte Carlo laboratory for density convergence of "
                 "Hermite-rank functionals of fractional Gaussian noise"};
    app.require_subcommand(1);

    std::string config_path, out_dir = "out", level = "fast";

    auto* verify = app.add_subcommand("verify", "run the module invariant batteries");
    verify->add_option("--level", level, "fast|full")->check(CLI::IsMember({"fast", "full"}));
    verify->add_option("--config", config_path, "optional config (schema-validated only)");
    verify->add_option("--out", out_dir, "output directory for summary.json");

    auto* simulate = app.add_subcommand("simulate", "sample fGn paths to CSV");
    simulate->add_option("--config", config_path, "experiment config file")->required();
    simulate->add_option("--out", out_dir, "output directory");

    auto* cumulants = app.add_subcommand("cumulants", "cumulant grid to cumulants.csv");
    cumulants->add_option("--config", config_path, "experiment config file")->required();
    cumulants->add_option("--out", out_dir, "output directory");

    auto* density = app.add_subcommand("density", "exact density curves and distances (m = 2)");
    density->add_option("--config", config_path, "experiment config file")->required();
    density->add_option("--out", out_dir, "output directory");

    auto* rates = app.add_subcommand("rates", "full rate experiment with slope fits");
    rates->add_option("--config", config_path, "experiment config file")->required();
    rates->add_option("--out", out_dir, "output directory");

    CLI11_PARSE(app, argc, argv);

    try {
        if (verify->parsed()) {
            if (!config_path.empty()) (void)parse_config_file(config_path);  // schema check
            const VerifyLevel lv = (level == "full") ? VerifyLevel::full : VerifyLevel::fast;
            const auto t0 = std::chrono::steady_clock::now();
            const auto results = verify_suite(lv);
            const bool ok = print_verify_report(results);
            const double secs =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            std::printf("%s verify --level %s in %.1fs\n", ok ? "PASS" : "FAIL", level.c_str(), secs);
            std::filesystem::create_directories(out_dir);
            nlohmann::json j;
            j["level"] = level;
            j["seconds"] = secs;
            j["all_pass"] = ok;
            j["checks"] = nlohmann::json::array();
            for (const auto& r : results)
                j["checks"].push_back(
                    {{"name", r.name}, {"pass", r.pass}, {"seconds", r.seconds}, {"detail", r.detail}});
            std::ofstream(out_dir + "/summary.json") << j.dump(2) << '\n';
            return ok ? 0 : 1;
        }

        const ExperimentConfig cfg = parse_config_file(config_path);

        if (simulate->parsed()) {
            std::filesystem::create_directories(out_dir);
            const CovarianceModel model = make_fgn_model(cfg.hurst);
            const std::int64_t n = cfg.n_grid.back();
            const std::int64_t count = cfg.reps > 0 ? cfg.reps : 1;
            const PathBatch batch = fgn_sample(model, n, count, cfg.seed);
            path_batch_to_csv(batch, out_dir + "/paths.csv");
            std::printf("wrote %lld paths of length %lld to %s/paths.csv\n",
                        static_cast<long long>(count), static_cast<long long>(n), out_dir.c_str());
            return 0;
        }
        if (cumulants->parsed()) {
            run_cumulant_grid(cfg, out_dir);
            std::printf("wrote %s/cumulants.csv\n", out_dir.c_str());
            return 0;
        }
        if (density->parsed()) {
            run_density_curves(cfg, out_dir);
            std::printf("wrote density curves and %s/distances.csv\n", out_dir.c_str());
            return 0;
        }
        if (rates->parsed()) {
            const RateReport report = run_rate_experiment(cfg, out_dir);
            for (const auto& s : report.slopes)
                std::printf("%s %s: fitted %.4f vs predicted %.4f (log^%d, tol %.3f)\n",
                            s.pass ? "PASS" : "FAIL", s.quantity.c_str(), s.fitted, s.predicted,
                            s.log_power, s.tolerance);
            for (const auto& f : report.flags) std::printf("FLAG %s\n", f.c_str());
            std::printf("%s rates -> %s\n", report.all_pass ? "PASS" : "FAIL", out_dir.c_str());
            return report.all_pass ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 0;
}

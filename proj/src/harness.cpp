#include "chaoslab/harness.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>

#include <json.hpp>

#include "chaoslab/chaos.hpp"
#include "chaoslab/curve.hpp"
#include "chaoslab/density.hpp"
#include "chaoslab/quadform.hpp"
#include "chaoslab/ratefit.hpp"

namespace chaoslab {

namespace {

using json = nlohmann::json;

CurveNorm norm_from_name(const std::string& name) {
    if (name == "sup") return CurveNorm::sup;
    if (name == "L1") return CurveNorm::L1;
    if (name == "L2") return CurveNorm::L2;
    throw std::invalid_argument("unknown norm " + name);
}

CumulantRecord exact_record_m2(const ExperimentConfig& cfg, std::int64_t n) {
    const CovarianceModel model{cfg.hurst};
    const auto kappas = exact_cumulants_m2_toeplitz(model, n, cfg.nu, 4);
    CumulantRecord rec;
    rec.n = n;
    rec.kappa3 = kappas[1];
    rec.kappa4 = kappas[2];
    rec.m_stat = std::max(std::abs(rec.kappa3), rec.kappa4);
    rec.method = "exact";
    return rec;
}

SlopeOutcome judge_slope(const std::string& quantity, const RateFit& fit, const RateOrder& pred,
                         double tol) {
    SlopeOutcome s;
    s.quantity = quantity;
    s.predicted = pred.exponent;
    s.log_power = pred.log_power;
    s.fitted = fit.slope;
    s.stderr_slope = fit.stderr_slope;
    s.tolerance = tol;
    s.pass = std::abs(fit.slope - pred.exponent) <= tol;
    return s;
}

void write_slopes_csv(const std::string& path, const std::vector<SlopeOutcome>& slopes) {
    std::ofstream os(path);
    os.precision(17);
    os << "quantity,predicted_exponent,log_power,fitted_slope,stderr,tolerance,pass\n";
    for (const auto& s : slopes)
        os << s.quantity << ',' << s.predicted << ',' << s.log_power << ',' << s.fitted << ','
           << s.stderr_slope << ',' << s.tolerance << ',' << (s.pass ? 1 : 0) << '\n';
}

}  // namespace

RateReport run_rate_experiment(const ExperimentConfig& cfg, const std::string& out_dir) {
    validate_config(cfg);
    std::filesystem::create_directories(out_dir);
    RateReport report;

    // --- cumulant grid ---
    std::vector<CumulantRecord> records;
    for (std::int64_t n : cfg.n_grid) {
        const ChaosSpec spec = make_chaos_spec(cfg.m, cfg.nu, cfg.hurst, n);
        CumulantRecord rec =
            (cfg.m == 2) ? exact_record_m2(cfg, n) : cumulants_mc(spec, cfg.reps, cfg.seed + n);
        if (rec.method == "monte-carlo") {
            if (std::abs(rec.kappa4) > 0 && rec.se4 > 0.5 * std::abs(rec.kappa4))
                report.flags.push_back("kappa4 standard error exceeds half the estimate at n=" +
                                       std::to_string(n));
            if (cfg.m % 2 == 0 && std::abs(rec.kappa3) > 0 && rec.se3 > 0.5 * std::abs(rec.kappa3))
                report.flags.push_back("kappa3 standard error exceeds half the estimate at n=" +
                                       std::to_string(n));
        }
        records.push_back(rec);
    }
    {
        std::ofstream os(out_dir + "/cumulants.csv");
        os << cumulant_record_csv_header() << '\n';
        for (std::size_t i = 0; i < records.size(); ++i) {
            const ChaosSpec spec = make_chaos_spec(cfg.m, cfg.nu, cfg.hurst, cfg.n_grid[i]);
            os << cumulant_record_csv_row(spec, records[i]) << '\n';
        }
    }

    // --- cumulant slope fits ---
    auto fit_and_judge = [&](const std::string& name, RateQuantity q,
                             const std::function<double(const CumulantRecord&)>& pick) {
        const RateOrder pred = predicted_exponent(cfg.m, cfg.hurst, q);
        std::vector<std::pair<std::int64_t, double>> pts;
        for (const auto& rec : records) {
            const double y = std::abs(pick(rec));
            if (y > 0.0) pts.emplace_back(rec.n, y);
        }
        if (pts.size() < 4) {
            report.flags.push_back("insufficient positive points for " + name + " fit");
            return;
        }
        const RateFit fit = fit_loglog(pts, pred.log_power);
        const double tol =
            pred.log_power > 0 ? cfg.slope_tol_cumulant_log
                               : (cfg.m == 2 ? cfg.slope_tol_cumulant : cfg.slope_tol_cumulant_log);
        report.slopes.push_back(judge_slope(name, fit, pred, tol));
    };
    if (cfg.m % 2 == 0)
        fit_and_judge("kappa3", RateQuantity::kappa3, [](const CumulantRecord& r) { return r.kappa3; });
    fit_and_judge("kappa4", RateQuantity::kappa4, [](const CumulantRecord& r) { return r.kappa4; });
    fit_and_judge("M", RateQuantity::M, [](const CumulantRecord& r) { return r.m_stat; });

    // --- density distances (exact machinery, m = 2 only) ---
    std::ofstream dist_os(out_dir + "/distances.csv");
    dist_os.precision(17);
    dist_os << "n,j,norm,distance,edgeworth_distance\n";
    if (cfg.m == 2) {
        const CovarianceModel model{cfg.hurst};
        const Grid grid;
        std::map<std::string, std::vector<std::pair<std::int64_t, double>>> dist_pts, edge_pts;
        for (std::int64_t n : cfg.n_grid) {
            if (n > cfg.density_n_cap) continue;
            const QuadFormSpec spec = make_quadform_spec(model, n, cfg.nu);
            const double kappa3 = exact_cumulants_m2(spec, 3)[1];
            for (int j : cfg.derivative_orders) {
                const DensityCurve rho_f = exact_density_m2(spec, grid, j);
                const DensityCurve rho_n = gaussian_reference(grid, j);
                const DensityCurve edge = edgeworth_reference(kappa3, grid, j);
                for (const auto& nm : cfg.norms) {
                    const double d = curve_distance(rho_f, rho_n, norm_from_name(nm));
                    const double de = curve_distance(rho_f, edge, norm_from_name(nm));
                    dist_os << n << ',' << j << ',' << nm << ',' << d << ',' << de << '\n';
                    const std::string key = "j" + std::to_string(j) + "_" + nm;
                    dist_pts[key].emplace_back(n, d);
                    edge_pts[key].emplace_back(n, de);
                }
            }
        }
        const RateOrder m_pred = predicted_exponent(2, cfg.hurst, RateQuantity::M);
        const RateOrder k3_pred = predicted_exponent(2, cfg.hurst, RateQuantity::kappa3);
        const RateOrder k4_pred = predicted_exponent(2, cfg.hurst, RateQuantity::kappa4);
        RateOrder edge_pred;  // slower of kappa4 and kappa3^2
        if (2.0 * k3_pred.exponent > k4_pred.exponent)
            edge_pred = RateOrder{2.0 * k3_pred.exponent, 2 * k3_pred.log_power};
        else
            edge_pred = k4_pred;
        for (const auto& [key, pts] : dist_pts) {
            if (pts.size() >= 4)
                report.slopes.push_back(judge_slope("density_" + key, fit_loglog(pts, m_pred.log_power),
                                                    m_pred, cfg.slope_tol_density));
        }
        for (const auto& [key, pts] : edge_pts) {
            if (pts.size() >= 4)
                report.slopes.push_back(judge_slope("edgeworth_" + key,
                                                    fit_loglog(pts, edge_pred.log_power), edge_pred,
                                                    cfg.slope_tol_edgeworth));
        }
    }

    write_slopes_csv(out_dir + "/slopes.csv", report.slopes);

    for (const auto& s : report.slopes) report.all_pass = report.all_pass && s.pass;
    json summary;
    summary["m"] = cfg.m;
    summary["hurst"] = cfg.hurst;
    summary["nu"] = cfg.nu;
    summary["seed"] = cfg.seed;
    summary["n_grid"] = cfg.n_grid;
    summary["all_pass"] = report.all_pass;
    summary["flags"] = report.flags;
    summary["slopes"] = json::array();
    for (const auto& s : report.slopes)
        summary["slopes"].push_back({{"quantity", s.quantity},
                                     {"predicted", s.predicted},
                                     {"log_power", s.log_power},
                                     {"fitted", s.fitted},
                                     {"stderr", s.stderr_slope},
                                     {"tolerance", s.tolerance},
                                     {"pass", s.pass}});
    std::ofstream(out_dir + "/summary.json") << summary.dump(2) << '\n';
    return report;
}

void run_cumulant_grid(const ExperimentConfig& cfg, const std::string& out_dir) {
    validate_config(cfg);
    std::filesystem::create_directories(out_dir);
    std::ofstream os(out_dir + "/cumulants.csv");
    os << cumulant_record_csv_header() << '\n';
    for (std::int64_t n : cfg.n_grid) {
        const ChaosSpec spec = make_chaos_spec(cfg.m, cfg.nu, cfg.hurst, n);
        const CumulantRecord rec =
            (cfg.m == 2) ? exact_record_m2(cfg, n) : cumulants_mc(spec, cfg.reps, cfg.seed + n);
        os << cumulant_record_csv_row(spec, rec) << '\n';
    }
}

void run_density_curves(const ExperimentConfig& cfg, const std::string& out_dir) {
    validate_config(cfg);
    if (cfg.m != 2)
        throw std::invalid_argument("density curves need the exact m = 2 machinery");
    std::filesystem::create_directories(out_dir);
    const CovarianceModel model{cfg.hurst};
    const Grid grid;
    std::ofstream dist_os(out_dir + "/distances.csv");
    dist_os.precision(17);
    dist_os << "n,j,norm,distance,edgeworth_distance\n";
    for (std::int64_t n : cfg.n_grid) {
        if (n > cfg.density_n_cap) continue;
        const QuadFormSpec spec = make_quadform_spec(model, n, cfg.nu);
        const double kappa3 = exact_cumulants_m2(spec, 3)[1];
        for (int j : cfg.derivative_orders) {
            const DensityCurve rho_f = exact_density_m2(spec, grid, j);
            curve_to_csv(rho_f,
                         out_dir + "/density_n" + std::to_string(n) + "_j" + std::to_string(j) + ".csv",
                         cfg.hurst, n, 2);
            const DensityCurve rho_n = gaussian_reference(grid, j);
            const DensityCurve edge = edgeworth_reference(kappa3, grid, j);
            for (const auto& nm : cfg.norms)
                dist_os << n << ',' << j << ',' << nm << ','
                        << curve_distance(rho_f, rho_n, norm_from_name(nm)) << ','
                        << curve_distance(rho_f, edge, norm_from_name(nm)) << '\n';
        }
    }
}

}  // namespace chaoslab

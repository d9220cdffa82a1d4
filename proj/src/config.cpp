#include "chaoslab/config.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace chaoslab {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream is(s);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        tok = trim(tok);
        if (!tok.empty()) out.push_back(tok);
    }
    return out;
}

}  // namespace

ExperimentConfig parse_config_text(const std::string& text) {
    ExperimentConfig cfg;
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config line " + std::to_string(lineno) + ": expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string val = trim(line.substr(eq + 1));
        try {
            if (key == "m") cfg.m = std::stoi(val);
            else if (key == "hurst") cfg.hurst = std::stod(val);
            else if (key == "nu") cfg.nu = std::stod(val);
            else if (key == "n_grid") {
                cfg.n_grid.clear();
                for (const auto& t : split_list(val)) cfg.n_grid.push_back(std::stoll(t));
            } else if (key == "reps") cfg.reps = std::stoll(val);
            else if (key == "seed") cfg.seed = std::stoull(val);
            else if (key == "norms") cfg.norms = split_list(val);
            else if (key == "derivative_orders") {
                cfg.derivative_orders.clear();
                for (const auto& t : split_list(val)) cfg.derivative_orders.push_back(std::stoi(t));
            } else if (key == "output_dir") cfg.output_dir = val;
            else if (key == "slope_tol_cumulant") cfg.slope_tol_cumulant = std::stod(val);
            else if (key == "slope_tol_cumulant_log") cfg.slope_tol_cumulant_log = std::stod(val);
            else if (key == "slope_tol_density") cfg.slope_tol_density = std::stod(val);
            else if (key == "slope_tol_edgeworth") cfg.slope_tol_edgeworth = std::stod(val);
            else if (key == "density_n_cap") cfg.density_n_cap = std::stoll(val);
            else if (key == "mc_density_n_cap") cfg.mc_density_n_cap = std::stoll(val);
            else throw std::invalid_argument("unknown key '" + key + "'");
        } catch (const std::invalid_argument& e) {
            throw std::invalid_argument("config line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    validate_config(cfg);
    return cfg;
}

ExperimentConfig parse_config_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot open config file " + path);
    std::ostringstream buf;
    buf << is.rdbuf();
    return parse_config_text(buf.str());
}

void validate_config(const ExperimentConfig& cfg) {
    if (cfg.m < 2) throw std::invalid_argument("config: m must be >= 2");
    if (!(cfg.hurst > 0.0 && cfg.hurst < 1.0 - 0.5 / cfg.m))
        throw std::invalid_argument("config: hurst outside the Breuer-Major regime (0, 1-1/(2m))");
    if (cfg.nu == 0.0) throw std::invalid_argument("config: nu must be nonzero");
    if (cfg.n_grid.empty()) throw std::invalid_argument("config: n_grid empty");
    for (std::size_t i = 0; i < cfg.n_grid.size(); ++i) {
        if (cfg.n_grid[i] < 2) throw std::invalid_argument("config: n_grid entries must be >= 2");
        if (i > 0 && cfg.n_grid[i] <= cfg.n_grid[i - 1])
            throw std::invalid_argument("config: n_grid must be strictly increasing");
    }
    if (cfg.reps < 0) throw std::invalid_argument("config: reps must be >= 0");
    for (const auto& nm : cfg.norms)
        if (nm != "sup" && nm != "L1" && nm != "L2")
            throw std::invalid_argument("config: norm '" + nm + "' not in {sup, L1, L2}");
    for (int j : cfg.derivative_orders)
        if (j < 0 || j > 4) throw std::invalid_argument("config: derivative orders must lie in 0..4");
}

}  // namespace chaoslab

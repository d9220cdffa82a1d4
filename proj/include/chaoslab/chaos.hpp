#pragma once

#include <cstdint>
#include <string>

#include "chaoslab/fgn.hpp"

namespace chaoslab {

// Breuer-Major experiment: V_n = n^{-1/2} sum_{l<=n} nu H_m(X_l) over fGn
// increments X, F_n its unit-variance normalization.
struct ChaosSpec {
    int m = 2;          // Hermite rank >= 2
    double nu = 1.0;    // != 0
    double hurst = 0.5; // must satisfy H < 1 - 1/(2m)
    std::int64_t n = 0;
};

ChaosSpec make_chaos_spec(int m, double nu, double hurst, std::int64_t n);  // validates

struct CumulantRecord {
    std::int64_t n = 0;
    double kappa3 = 0.0;
    double kappa4 = 0.0;
    double m_stat = 0.0;  // max(|kappa3|, kappa4)
    double se3 = 0.0;
    double se4 = 0.0;
    std::string method;   // "exact" | "monte-carlo"
};

// E[V_n^2] = (nu^2 m!/n) sum_{|l|<n} (n-|l|) rho(l)^m.
double sigma_n2(const ChaosSpec& spec);

// Exact third cumulant: 0 for odd m; for even m the triple diagram sum
//   (nu/(sqrt(n) sigma_n))^3 c_m sum_{i,j,k} (rho(i-j) rho(j-k) rho(i-k))^{m/2},
// c_m = (m!)^3/((m/2)!)^3, reduced to O(n^2) by lag-pair counting.
double kappa3_exact(const ChaosSpec& spec);

// Monte Carlo cumulants of F_n via fgn_sample + hermite_poly; unbiased
// k-statistics with jackknife standard errors; deterministic under seed.
CumulantRecord cumulants_mc(const ChaosSpec& spec, std::int64_t reps, std::uint64_t seed);

enum class RateQuantity { kappa3, kappa4, M };

struct RateOrder {
    double exponent = 0.0;
    int log_power = 0;
};

// Asymptotic order n^{exponent} (log n)^{log_power} of |kappa3|, kappa4,
// or M(F_n) = max(|kappa3|, kappa4) for the fGn Breuer-Major family,
// including every boundary case. Errors: odd m with kappa3 (identically
// zero), H outside (0, 1 - 1/(2m)).
RateOrder predicted_exponent(int m, double hurst, RateQuantity which);

// CSV row: m,H,n,method,kappa3,se3,kappa4,se4,m_stat.
std::string cumulant_record_csv_header();
std::string cumulant_record_csv_row(const ChaosSpec& spec, const CumulantRecord& rec);

}  // namespace chaoslab

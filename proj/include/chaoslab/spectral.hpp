#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace chaoslab {

// Finite truncation of a tempered distribution in the Hermite-function
// basis: the represented object is sum_{n<=K} coeffs[n] phi_n. Values are
// immutable after construction; every operation returns a new rep. Each
// ladder application reduces the truncation by one so that all retained
// coefficients stay exact (no boundary corruption); comparisons across
// reps align on the shorter truncation.
struct SpectralRep {
    std::vector<double> coeffs;

    SpectralRep() = default;
    explicit SpectralRep(std::vector<double> c) : coeffs(std::move(c)) {}

    int truncation() const { return static_cast<int>(coeffs.size()) - 1; }
    double coeff(int n) const {
        return (n >= 0 && n < static_cast<int>(coeffs.size())) ? coeffs[n] : 0.0;
    }
};

// ||T||_{S_alpha} = 2^{alpha/2} (sum (n+1)^alpha c_n^2)^{1/2}.
double s_alpha_norm(const SpectralRep& rep, double alpha);

// Dual ladder action of the distributional derivative:
// (DT)_n = sqrt((n+1)/2) c_{n+1} - sqrt(n/2) c_{n-1}; truncation K-1.
SpectralRep ladder_derivative(const SpectralRep& rep);

// (xT)_n = sqrt((n+1)/2) c_{n+1} + sqrt(n/2) c_{n-1}; truncation K-1.
SpectralRep ladder_mult_x(const SpectralRep& rep);

SpectralRep ladder_derivative_k(const SpectralRep& rep, int k);

// c_n = phi_n(a), the Hermite coefficients of delta_a.
SpectralRep delta_coeffs(double a, int truncation);

// Hermite coefficients of the constant function 1.
SpectralRep one_coeffs(int truncation);

// Hermite coefficients of the standard normal density (exactly
// proportional to phi_0).
SpectralRep rho_normal_coeffs(int truncation);

// Parseval pairing sum t_n s_n; shorter vector zero-padded.
double pair_reps(const SpectralRep& t, const SpectralRep& s);

// Linear combination and pointwise reconstruction helpers.
SpectralRep rep_axpy(double a, const SpectralRep& x, double b, const SpectralRep& y);
SpectralRep rep_scale(double a, const SpectralRep& x);
double evaluate_rep(const SpectralRep& rep, double x);

struct ProjectOptions {
    std::vector<double> split_points;  // integrable discontinuities of f
    double x_max = 0.0;                // 0 -> derived from the truncation
    double rel_tol = 1e-9;             // panel-doubling convergence target
};

struct ProjectionResult {
    SpectralRep rep;
    double tail_mass = 0.0;  // relative l^2 mass in the top 10% of indices
};

// Hermite transform c_n = int f phi_n by composite Gauss-Legendre panels
// sized to the phi_K oscillation, doubled until the coefficient vector
// stabilizes. Throws (with the failing index) on non-convergence.
ProjectionResult project_function(const std::function<double(double)>& f, int truncation,
                                  const ProjectOptions& opts = {});

// Flat record: K, then the K+1 coefficients.
std::string rep_to_csv(const SpectralRep& rep);
SpectralRep rep_from_csv(const std::string& line);

}  // namespace chaoslab

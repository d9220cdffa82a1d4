#pragma once

#include <cstdint>
#include <vector>

#include "chaoslab/curve.hpp"
#include "chaoslab/fgn.hpp"

namespace chaoslab {

// Second-chaos statistic F_n = (nu/(sqrt(n) sigma_n)) (sum lambda_j Z_j^2 - n),
// the eigenvalue form of the m = 2 normalized sum nu H_2 over the first n
// fGn increments. Ground truth for cumulants and densities.
struct QuadFormSpec {
    double hurst = 0.5;
    std::int64_t n = 0;
    double nu = 1.0;
    std::vector<double> eigs;  // spectrum of Sigma_n, sum = n
    double sigma_n2 = 0.0;     // E[V_n^2] = 2 nu^2 sum lambda^2 / n
};

// Eigenvalues via a dense symmetric solver, cached per (H, n); at H = 1/2
// the matrix is exactly diagonal and the solve is skipped. n is capped at
// 4096 (solver cost); cumulants beyond that use the Toeplitz trace route.
QuadFormSpec make_quadform_spec(const CovarianceModel& model, std::int64_t n, double nu);

// kappa_p(F_n) = 2^{p-1} (p-1)! (nu/(sqrt(n) sigma_n))^p sum lambda^p for
// p = 2..p_max (p_max <= 8); kappa_2 = 1 by construction.
std::vector<double> exact_cumulants_m2(const QuadFormSpec& spec, int p_max);

// tr Sigma^p for p = 1..p_max (p_max <= 4) from the Toeplitz structure
// alone: lag sums for p <= 3, prefix-convolution scheme for p = 4; O(n^2)
// total, so it scales to n = 2^13 without an eigensolver.
std::vector<double> toeplitz_trace_powers(const CovarianceModel& model, std::int64_t n, int p_max);

// Same cumulants through the trace route (cross-check and large-n path).
std::vector<double> exact_cumulants_m2_toeplitz(const CovarianceModel& model, std::int64_t n,
                                                double nu, int p_max);

// rho_{F_n}^{(j)} (j <= 4) by characteristic-function inversion
//   phi(t) = e^{-i t c n} prod_j (1 - 2 i t c lambda_j)^{-1/2},
// evaluated as exp(-i t c n - sum log(.)/2) with principal logs (every
// factor has real part 1, so no branch crossing), inverted by FFT.
// Grid must be [-8, 8] with npoints-1 a power of two >= 4096. The FFT
// size is grown until |phi(t_max)| < 1e-13, or until the truncation
// ringing proxy |phi(t_max)|/(pi t_max d) at edge distance d = 0.05 is
// below 1e-7 (heavy-tailed small-n characteristic functions cannot meet
// the strict bound); errors out otherwise.
DensityCurve exact_density_m2(const QuadFormSpec& spec, const Grid& grid, int deriv_order);

}  // namespace chaoslab

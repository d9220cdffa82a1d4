#pragma once

#include <utility>

#include "chaoslab/spectral.hpp"

namespace chaoslab {

// Scaled complementary error function e^{x^2} erfc(x). Direct product up
// to the erfc underflow, Laplace continued fraction beyond; finite for all
// x >= -26 (large negative arguments overflow, which callers avoid by
// branch selection).
double erfcx(double x);

// Stein solution with a delta test distribution: the bounded solution of
// D T - x T = delta_a - rho_N(a) restricted to functions,
//   f_a(x) = rho_N(a) e^{x^2/2} ( int_x^inf e^{-y^2/2} dy  on x > a,
//            -int_-inf^x e^{-y^2/2} dy                     on x < a ).
// Evaluated through erfcx so no intermediate e^{x^2/2} overflows for
// |x| <= 38. At x == a returns the right limit.
double f_a_eval(double a, double x);

struct SteinSolution {
    double a = 0.0;
    int n = 0;
    SpectralRep rep;
    double jump = 0.0;  // discontinuity of the f_a part at x = a (1 for n = 0)
};

// Hermite representation of f_{a,n}, the solution of
//   D T - x T = (-1)^n D^n delta_a - rho_N^{(n)}(a).
// n = 0: quadrature projection of f_a split at the jump;
// n >= 1: (-1)^n [ sum_{k<n} H_k D^{n-1-k} delta_a + H_n(a) f_a ], products
// H_k T expanded through repeated ladder_mult_x with the exact monomial
// coefficients of H_k. Output truncation is exactly K (requires K >= n+8).
SpectralRep f_an_coeffs(double a, int n, int truncation);

SteinSolution make_stein_solution(double a, int n, int truncation);

// Hermite coefficients of D f_{a,n} - x f_{a,n} - (-1)^n D^n delta_a
// + rho_N^{(n)}(a) 1, all built with ladder operators (truncation K-1).
SpectralRep stein_residual(double a, int n, int truncation);

// S_{-n-1} norm of the residual relative to that of D^n delta_a.
double stein_residual_relnorm(double a, int n, int truncation);

// Pairing identity: lhs = <f_{a,n}, rho_N^{(q)}>,
// rhs = rho_N^{(n+q+1)}(a) / (q+1).
std::pair<double, double> pairing_identity_check(double a, int n, int q, int truncation);

}  // namespace chaoslab

#pragma once

#include <cstdint>
#include <map>
#include <vector>

namespace chaoslab {

// Probabilists' Hermite polynomials H_n (weight e^{-x^2/2}) and the
// orthonormal Hermite functions phi_n of L^2(R). The physicists'
// convention appears nowhere in the public surface.

constexpr double kTwoPi = 6.2831853071795864769;
constexpr double kInvSqrt2Pi = 0.39894228040143267794;  // (2 pi)^{-1/2}
constexpr double kPiQuarterInv = 0.75112554446494248286;  // pi^{-1/4}

// H_n(x) by the three-term recurrence H_{n+1} = x H_n - n H_{n-1}.
// Overflow to infinity for extreme n*x is permitted.
double hermite_poly(int n, double x);

// Values H_0(x)..H_n(x).
std::vector<double> hermite_poly_all(int n, double x);

// Monomial coefficients of H_n, exact integers (index = power of x).
// Exact in double while every coefficient fits 53 bits (n <= 28).
std::vector<double> hermite_poly_coeffs(int n);

// Hermite function phi_n(x); stable normalized recurrence, no factorial
// overflow for n <= 1e4. Deep in the classically forbidden region the
// recurrence runs in scaled form so underflow of phi_0 does not poison
// larger n.
double hermite_phi(int n, double x);

// Values phi_0(x)..phi_n(x).
std::vector<double> hermite_phi_all(int n, double x);

// e^{x^2/2} phi_n(x), i.e. the orthonormal Hermite basis without the
// Gaussian factor; used with Gauss-Hermite rules. Overflows for |x|
// beyond ~ sqrt(1400).
std::vector<double> hermite_phi_weightless_all(int n, double x);

// Linearization H_m H_n = sum_j binom(m,j) binom(n,j) j! H_{m+n-2j};
// keys are the orders m+n-2j.
std::map<int, double> hermite_product_coeffs(int m, int n);

// Closed form of int phi_n(x) e^{-alpha x^2} dx, alpha >= 0; zero for odd
// n. Factorial prefactors are evaluated through lgamma.
double gauss_integral_phi(int n, double alpha);

// rho_N^{(j)}(x) = (-1)^j H_j(x) rho_N(x).
double gaussian_density_derivative(int j, double x);

// Grid sup-norms of phi_0..phi_n over a symmetric dense grid covering the
// oscillatory region (|x| <= sqrt(2n+1)+2, step ~ 6e-3). Cached.
const std::vector<double>& phi_sup_norms(int n_max);

}  // namespace chaoslab

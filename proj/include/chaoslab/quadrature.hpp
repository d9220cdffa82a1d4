#pragma once

#include <functional>
#include <vector>

namespace chaoslab {

struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

// Gauss-Hermite rule for integrals against e^{-x^2} on R, exact for
// polynomials of degree <= 2*order-1. Nodes/weights via Golub-Welsch.
// Order is capped at 600: larger rules would need e^{x^2/2}-scaled basis
// evaluations that overflow; use composite Gauss-Legendre panels instead.
const GaussRule& gauss_hermite_rule(int order);

// Gauss-Legendre rule on [-1, 1].
const GaussRule& gauss_legendre_rule(int order);

// Integral of f against e^{-x^2}: sum w_i f(x_i).
double integrate_hermite_weighted(const std::function<double(double)>& f, int order);

// Composite Gauss-Legendre over [a, b] with equal panels.
double integrate_panels(const std::function<double(double)>& f, double a, double b, int panels,
                        int order = 12);

// Adaptive bisection with a two-level Gauss-Legendre error estimate.
// Throws on non-convergence.
double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double abs_tol = 1e-12, double rel_tol = 1e-12, int max_depth = 48);

}  // namespace chaoslab

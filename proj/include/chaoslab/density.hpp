#pragma once

#include <vector>

#include "chaoslab/curve.hpp"
#include "chaoslab/quadform.hpp"

namespace chaoslab {

// Orthogonal-series (Gram-Charlier) density estimate from sample Hermite
// moments m_k = mean H_k(F):
//   rho_hat^{(j)}(x) = sum_{k<=K} (m_k/k!) (-1)^j H_{k+j}(x) rho_N(x),
// the exact j-th derivative of the j = 0 estimator. K is capped at 30
// (variance blow-up).
DensityCurve gram_charlier_density(const std::vector<double>& samples, int order, const Grid& grid,
                                   int deriv_order);

// Gaussian-kernel estimate with Silverman bandwidth (binned, FFT-free);
// cross-check only.
DensityCurve kde_density(const std::vector<double>& samples, const Grid& grid);

// rho_N^{(j)} - (kappa3/6) rho_N^{(j+3)}: the one-term corrected Gaussian
// reference (j <= 4).
DensityCurve edgeworth_reference(double kappa3, const Grid& grid, int deriv_order);

struct LimitShapeResult {
    DensityCurve scaled_curve;  // (rho_{F_n} - rho_N) * 6/kappa3
    DensityCurve target;        // -rho_N^{(3)}
    double sup_gap = 0.0;
};

// The kappa3-rescaled density error against its limiting profile; the
// scaled curve approaches -rho_N^{(3)} in sup norm as n grows.
LimitShapeResult limit_shape_check(const QuadFormSpec& spec, const Grid& grid = Grid{});

}  // namespace chaoslab

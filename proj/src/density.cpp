#include "chaoslab/density.hpp"

#include <cmath>
#include <stdexcept>

#include "chaoslab/hermite.hpp"

namespace chaoslab {

DensityCurve gram_charlier_density(const std::vector<double>& samples, int order, const Grid& grid,
                                   int deriv_order) {
    if (samples.empty()) throw std::invalid_argument("gram_charlier_density: no samples");
    if (order < 0 || order > 30)
        throw std::invalid_argument("gram_charlier_density: order must be <= 30");
    if (deriv_order < 0) throw std::invalid_argument("gram_charlier_density: negative derivative");

    std::vector<double> mhat(order + 1, 0.0);
    for (double s : samples) {
        const auto h = hermite_poly_all(order, s);
        for (int k = 0; k <= order; ++k) mhat[k] += h[k];
    }
    for (auto& v : mhat) v /= static_cast<double>(samples.size());

    double kfact = 1.0;
    std::vector<double> coef(order + 1);
    for (int k = 0; k <= order; ++k) {
        if (k > 0) kfact *= k;
        coef[k] = mhat[k] / kfact;
    }

    DensityCurve out = make_curve(grid, deriv_order, CurveSource::gram_charlier);
    const double sign = (deriv_order % 2 == 0) ? 1.0 : -1.0;
    for (int i = 0; i < grid.npoints; ++i) {
        const double x = grid.x(i);
        const double rho = kInvSqrt2Pi * std::exp(-0.5 * x * x);
        const auto h = hermite_poly_all(order + deriv_order, x);
        double s = 0.0;
        for (int k = 0; k <= order; ++k) s += coef[k] * h[k + deriv_order];
        out.values[i] = sign * s * rho;
    }
    return out;
}

DensityCurve kde_density(const std::vector<double>& samples, const Grid& grid) {
    if (samples.empty()) throw std::invalid_argument("kde_density: no samples");
    const double n = static_cast<double>(samples.size());
    double mean = 0.0, m2 = 0.0;
    for (double s : samples) mean += s;
    mean /= n;
    for (double s : samples) m2 += (s - mean) * (s - mean);
    const double sd = std::sqrt(m2 / (n - 1.0));
    const double bw = 1.06 * sd * std::pow(n, -0.2);  // Silverman

    // Bin the samples on the output grid, then smooth with the kernel out
    // to 8 bandwidths; adequate for a cross-check.
    const double step = grid.step();
    std::vector<double> bin(grid.npoints, 0.0);
    for (double s : samples) {
        const double pos = (s - grid.x_min) / step;
        const int i = static_cast<int>(std::floor(pos));
        if (i < 0 || i + 1 >= grid.npoints) continue;
        const double frac = pos - i;
        bin[i] += 1.0 - frac;
        bin[i + 1] += frac;
    }
    const int reach = static_cast<int>(std::ceil(8.0 * bw / step));
    DensityCurve out = make_curve(grid, 0, CurveSource::kde);
    for (int i = 0; i < grid.npoints; ++i) {
        double s = 0.0;
        for (int k = std::max(0, i - reach); k <= std::min(grid.npoints - 1, i + reach); ++k) {
            const double u = (i - k) * step / bw;
            s += bin[k] * std::exp(-0.5 * u * u);
        }
        out.values[i] = s * kInvSqrt2Pi / (n * bw);
    }
    return out;
}

DensityCurve edgeworth_reference(double kappa3, const Grid& grid, int deriv_order) {
    if (deriv_order < 0 || deriv_order > 4)
        throw std::invalid_argument("edgeworth_reference: derivative order beyond 4 unsupported");
    DensityCurve out = make_curve(grid, deriv_order, CurveSource::reference);
    for (int i = 0; i < grid.npoints; ++i) {
        const double x = grid.x(i);
        out.values[i] = gaussian_density_derivative(deriv_order, x) -
                        kappa3 / 6.0 * gaussian_density_derivative(deriv_order + 3, x);
    }
    return out;
}

LimitShapeResult limit_shape_check(const QuadFormSpec& spec, const Grid& grid) {
    const double kappa3 = exact_cumulants_m2(spec, 3)[1];
    if (std::abs(kappa3) < 1e-300) throw std::invalid_argument("limit_shape_check: degenerate scaling");

    const DensityCurve rho_f = exact_density_m2(spec, grid, 0);
    const DensityCurve rho_n = gaussian_reference(grid, 0);

    LimitShapeResult res;
    res.scaled_curve = curve_axpy(6.0 / kappa3, rho_f, -6.0 / kappa3, rho_n);
    res.target = make_curve(grid, 0, CurveSource::reference);
    for (int i = 0; i < grid.npoints; ++i)
        res.target.values[i] = -gaussian_density_derivative(3, grid.x(i));
    res.sup_gap = curve_distance(res.scaled_curve, res.target, CurveNorm::sup);
    return res;
}

}  // namespace chaoslab

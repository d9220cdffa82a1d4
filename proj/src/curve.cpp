#include "chaoslab/curve.hpp"

#include <cmath>
#include <fstream>
#include <stdexcept>

#include "chaoslab/hermite.hpp"

namespace chaoslab {

DensityCurve make_curve(const Grid& grid, int deriv_order, CurveSource source) {
    DensityCurve c;
    c.x_min = grid.x_min;
    c.x_max = grid.x_max;
    c.step = grid.step();
    c.values.assign(grid.npoints, 0.0);
    c.deriv_order = deriv_order;
    c.source = source;
    return c;
}

DensityCurve gaussian_reference(const Grid& grid, int deriv_order) {
    DensityCurve c = make_curve(grid, deriv_order, CurveSource::reference);
    for (int i = 0; i < grid.npoints; ++i) c.values[i] = gaussian_density_derivative(deriv_order, grid.x(i));
    return c;
}

namespace {
void check_compatible(const DensityCurve& a, const DensityCurve& b) {
    if (a.npoints() != b.npoints() || a.deriv_order != b.deriv_order ||
        std::abs(a.x_min - b.x_min) > 1e-12 || std::abs(a.step - b.step) > 1e-15)
        throw std::invalid_argument("curve_distance: grid mismatch");
}
}  // namespace

double curve_distance(const DensityCurve& a, const DensityCurve& b, CurveNorm norm, double r) {
    check_compatible(a, b);
    const int n = a.npoints();
    if (norm == CurveNorm::sup) {
        double m = 0.0;
        for (int i = 0; i < n; ++i) m = std::max(m, std::abs(a.values[i] - b.values[i]));
        return m;
    }
    const double p = (norm == CurveNorm::L1) ? 1.0 : (norm == CurveNorm::L2 ? 2.0 : r);
    if (!(p >= 1.0)) throw std::invalid_argument("curve_distance: r < 1");
    double s = 0.0;
    for (int i = 0; i < n; ++i) {
        const double d = std::pow(std::abs(a.values[i] - b.values[i]), p);
        s += (i == 0 || i == n - 1) ? 0.5 * d : d;
    }
    return std::pow(s * a.step, 1.0 / p);
}

double curve_moment(const DensityCurve& c, int p) {
    const int n = c.npoints();
    double s = 0.0;
    for (int i = 0; i < n; ++i) {
        const double v = std::pow(c.x(i), p) * c.values[i];
        s += (i == 0 || i == n - 1) ? 0.5 * v : v;
    }
    return s * c.step;
}

double curve_moment_simpson(const DensityCurve& c, int p) {
    const int n = c.npoints();
    if (n % 2 == 0) throw std::invalid_argument("curve_moment_simpson: npoints must be odd");
    double s = 0.0;
    for (int i = 0; i < n; ++i) {
        const double v = std::pow(c.x(i), p) * c.values[i];
        const double w = (i == 0 || i == n - 1) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
        s += w * v;
    }
    return s * c.step / 3.0;
}

DensityCurve curve_axpy(double alpha, const DensityCurve& x, double beta, const DensityCurve& y) {
    check_compatible(x, y);
    DensityCurve out = x;
    for (int i = 0; i < out.npoints(); ++i) out.values[i] = alpha * x.values[i] + beta * y.values[i];
    return out;
}

void curve_to_csv(const DensityCurve& c, const std::string& path, double hurst, long long n, int m) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open " + path);
    os.precision(17);
    os << "x,value,j,H,n,m\n";
    for (int i = 0; i < c.npoints(); ++i)
        os << c.x(i) << ',' << c.values[i] << ',' << c.deriv_order << ',' << hurst << ',' << n << ','
           << m << '\n';
}

}  // namespace chaoslab

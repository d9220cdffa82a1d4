#pragma once

#include <string>
#include <vector>

namespace chaoslab {

enum class CurveSource { exact, gram_charlier, kde, reference };

struct Grid {
    double x_min = -8.0;
    double x_max = 8.0;
    int npoints = 4097;  // uniform, endpoints included

    double step() const { return (x_max - x_min) / (npoints - 1); }
    double x(int i) const { return x_min + i * step(); }
};

// A density (or density derivative) tabulated on a uniform grid.
struct DensityCurve {
    double x_min = 0.0;
    double x_max = 0.0;
    double step = 0.0;
    std::vector<double> values;
    int deriv_order = 0;
    CurveSource source = CurveSource::reference;

    int npoints() const { return static_cast<int>(values.size()); }
    double x(int i) const { return x_min + i * step; }
};

DensityCurve make_curve(const Grid& grid, int deriv_order, CurveSource source);

// rho_N^{(j)} on the grid.
DensityCurve gaussian_reference(const Grid& grid, int deriv_order);

enum class CurveNorm { sup, L1, L2, Lr };

// Grid sup or trapezoid L^r norm of A - B; grids and derivative orders
// must match exactly.
double curve_distance(const DensityCurve& a, const DensityCurve& b, CurveNorm norm, double r = 2.0);

// Trapezoid integral of x^p * curve over the grid.
double curve_moment(const DensityCurve& c, int p);

// Simpson integral of x^p * curve (npoints must be odd).
double curve_moment_simpson(const DensityCurve& c, int p);

DensityCurve curve_axpy(double alpha, const DensityCurve& x, double beta, const DensityCurve& y);

// CSV with header (x,value,j,H,n,m); H/n/m columns record provenance.
void curve_to_csv(const DensityCurve& c, const std::string& path, double hurst, long long n, int m);

}  // namespace chaoslab

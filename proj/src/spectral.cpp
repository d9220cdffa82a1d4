#include "chaoslab/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "chaoslab/hermite.hpp"
#include "chaoslab/quadrature.hpp"

namespace chaoslab {

double s_alpha_norm(const SpectralRep& rep, double alpha) {
    double s = 0.0;
    for (std::size_t n = 0; n < rep.coeffs.size(); ++n) {
        const double c = rep.coeffs[n];
        s += std::pow(n + 1.0, alpha) * c * c;
    }
    return std::pow(2.0, 0.5 * alpha) * std::sqrt(s);
}

SpectralRep ladder_derivative(const SpectralRep& rep) {
    const int K = rep.truncation();
    if (K < 1) throw std::invalid_argument("ladder_derivative: truncation too small");
    std::vector<double> out(K);
    for (int n = 0; n < K; ++n) {
        out[n] = std::sqrt(0.5 * (n + 1)) * rep.coeffs[n + 1] -
                 (n > 0 ? std::sqrt(0.5 * n) * rep.coeffs[n - 1] : 0.0);
    }
    return SpectralRep(std::move(out));
}

SpectralRep ladder_mult_x(const SpectralRep& rep) {
    const int K = rep.truncation();
    if (K < 1) throw std::invalid_argument("ladder_mult_x: truncation too small");
    std::vector<double> out(K);
    for (int n = 0; n < K; ++n) {
        out[n] = std::sqrt(0.5 * (n + 1)) * rep.coeffs[n + 1] +
                 (n > 0 ? std::sqrt(0.5 * n) * rep.coeffs[n - 1] : 0.0);
    }
    return SpectralRep(std::move(out));
}

SpectralRep ladder_derivative_k(const SpectralRep& rep, int k) {
    SpectralRep cur = rep;
    for (int i = 0; i < k; ++i) cur = ladder_derivative(cur);
    return cur;
}

SpectralRep delta_coeffs(double a, int truncation) {
    if (truncation < 0) throw std::invalid_argument("delta_coeffs: negative truncation");
    return SpectralRep(hermite_phi_all(truncation, a));
}

SpectralRep one_coeffs(int truncation) {
    if (truncation < 0) throw std::invalid_argument("one_coeffs: negative truncation");
    std::vector<double> c(truncation + 1, 0.0);
    for (int n = 0; n <= truncation; n += 2) c[n] = gauss_integral_phi(n, 0.0);
    return SpectralRep(std::move(c));
}

SpectralRep rho_normal_coeffs(int truncation) {
    // rho_N = (2 pi)^{-1/2} pi^{1/4} phi_0 exactly.
    std::vector<double> c(truncation + 1, 0.0);
    c[0] = kInvSqrt2Pi / kPiQuarterInv;
    return SpectralRep(std::move(c));
}

double pair_reps(const SpectralRep& t, const SpectralRep& s) {
    const std::size_t m = std::min(t.coeffs.size(), s.coeffs.size());
    double acc = 0.0;
    for (std::size_t n = 0; n < m; ++n) acc += t.coeffs[n] * s.coeffs[n];
    return acc;
}

SpectralRep rep_axpy(double a, const SpectralRep& x, double b, const SpectralRep& y) {
    const std::size_t m = std::min(x.coeffs.size(), y.coeffs.size());
    std::vector<double> out(m);
    for (std::size_t n = 0; n < m; ++n) out[n] = a * x.coeffs[n] + b * y.coeffs[n];
    return SpectralRep(std::move(out));
}

SpectralRep rep_scale(double a, const SpectralRep& x) {
    std::vector<double> out(x.coeffs);
    for (auto& v : out) v *= a;
    return SpectralRep(std::move(out));
}

double evaluate_rep(const SpectralRep& rep, double x) {
    const auto phis = hermite_phi_all(rep.truncation(), x);
    double s = 0.0;
    for (std::size_t n = 0; n < rep.coeffs.size(); ++n) s += rep.coeffs[n] * phis[n];
    return s;
}

namespace {

std::vector<double> project_pass(const std::function<double(double)>& f, int K,
                                 const std::vector<double>& edges, int panels_per_unit) {
    const GaussRule& gl = gauss_legendre_rule(12);
    std::vector<double> acc(K + 1, 0.0);
    for (std::size_t seg = 0; seg + 1 < edges.size(); ++seg) {
        const double lo = edges[seg], hi = edges[seg + 1];
        const int panels = std::max(1, static_cast<int>(std::ceil((hi - lo) * panels_per_unit)));
        const double w = (hi - lo) / panels;
        for (int p = 0; p < panels; ++p) {
            const double mid = lo + (p + 0.5) * w;
            for (std::size_t q = 0; q < gl.nodes.size(); ++q) {
                const double x = mid + 0.5 * w * gl.nodes[q];
                const double fx = f(x);
                if (fx == 0.0) continue;
                const double ww = 0.5 * w * gl.weights[q] * fx;
                const auto phis = hermite_phi_all(K, x);
                for (int n = 0; n <= K; ++n) acc[n] += ww * phis[n];
            }
        }
    }
    return acc;
}

}  // namespace

ProjectionResult project_function(const std::function<double(double)>& f, int truncation,
                                  const ProjectOptions& opts) {
    if (truncation < 0) throw std::invalid_argument("project_function: negative truncation");
    const int K = truncation;
    const double x_max =
        opts.x_max > 0.0 ? opts.x_max : std::sqrt(2.0 * K + 1.0) + 8.0;
    std::vector<double> edges{-x_max};
    for (double sp : opts.split_points)
        if (sp > -x_max && sp < x_max) edges.push_back(sp);
    edges.push_back(x_max);
    std::sort(edges.begin(), edges.end());

    // Panels sized to the phi_K wavelength 2 pi / sqrt(2K+1); order-12
    // Gauss-Legendre resolves one wavelength per panel to ~1e-13.
    int per_unit = static_cast<int>(std::ceil(std::sqrt(2.0 * K + 1.0) / 4.0)) + 1;
    std::vector<double> prev = project_pass(f, K, edges, per_unit);
    for (int pass = 0; pass < 5; ++pass) {
        per_unit *= 2;
        std::vector<double> cur = project_pass(f, K, edges, per_unit);
        double num = 0.0, den = 0.0;
        int worst = 0;
        double worst_diff = 0.0;
        for (int n = 0; n <= K; ++n) {
            const double d = cur[n] - prev[n];
            num += d * d;
            den += cur[n] * cur[n];
            if (std::abs(d) > worst_diff) {
                worst_diff = std::abs(d);
                worst = n;
            }
        }
        prev = std::move(cur);
        if (std::sqrt(num) <= opts.rel_tol * std::max(1e-300, std::sqrt(den))) {
            double tail = 0.0;
            const int tail_from = K - K / 10;
            for (int n = 0; n <= K; ++n)
                if (n >= tail_from) tail += prev[n] * prev[n];
            ProjectionResult res;
            res.rep = SpectralRep(std::move(prev));
            res.tail_mass = den > 0.0 ? std::sqrt(tail / den) : 0.0;
            return res;
        }
        if (pass == 4)
            throw std::runtime_error("project_function: no convergence at index " +
                                     std::to_string(worst));
    }
    throw std::runtime_error("project_function: unreachable");
}

std::string rep_to_csv(const SpectralRep& rep) {
    std::ostringstream os;
    os.precision(17);
    os << rep.truncation();
    for (double c : rep.coeffs) os << ',' << c;
    return os.str();
}

SpectralRep rep_from_csv(const std::string& line) {
    std::istringstream is(line);
    std::string tok;
    if (!std::getline(is, tok, ',')) throw std::invalid_argument("rep_from_csv: empty record");
    const int K = std::stoi(tok);
    std::vector<double> c;
    c.reserve(K + 1);
    while (std::getline(is, tok, ',')) c.push_back(std::stod(tok));
    if (static_cast<int>(c.size()) != K + 1)
        throw std::invalid_argument("rep_from_csv: coefficient count mismatch");
    return SpectralRep(std::move(c));
}

}  // namespace chaoslab

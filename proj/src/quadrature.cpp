#include "chaoslab/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

#include "chaoslab/linalg.hpp"

namespace chaoslab {

namespace {

constexpr double kSqrtPi = 1.7724538509055160273;

GaussRule build_hermite(int order) {
    // Jacobi matrix of the (monic) Hermite polynomials for weight e^{-x^2}:
    // zero diagonal, off-diagonal beta_k = sqrt(k/2).
    std::vector<double> d(order, 0.0), e(order - 1);
    for (int k = 1; k < order; ++k) e[k - 1] = std::sqrt(0.5 * k);
    std::vector<double> v0;
    GaussRule r;
    r.nodes = sym_tridiag_eigenvalues(std::move(d), std::move(e), &v0);
    r.weights.resize(order);
    for (int i = 0; i < order; ++i) r.weights[i] = kSqrtPi * v0[i] * v0[i];
    return r;
}

GaussRule build_legendre(int order) {
    std::vector<double> d(order, 0.0), e(order - 1);
    for (int k = 1; k < order; ++k) e[k - 1] = k / std::sqrt(4.0 * k * k - 1.0);
    std::vector<double> v0;
    GaussRule r;
    r.nodes = sym_tridiag_eigenvalues(std::move(d), std::move(e), &v0);
    r.weights.resize(order);
    for (int i = 0; i < order; ++i) r.weights[i] = 2.0 * v0[i] * v0[i];
    return r;
}

const GaussRule& cached_rule(int order, bool hermite) {
    static std::map<std::pair<int, bool>, GaussRule> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> g(mu);
    auto key = std::make_pair(order, hermite);
    auto it = cache.find(key);
    if (it == cache.end()) {
        it = cache.emplace(key, hermite ? build_hermite(order) : build_legendre(order)).first;
    }
    return it->second;
}

double gl_on(const std::function<double(double)>& f, double a, double b, const GaussRule& r) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double s = 0.0;
    for (std::size_t i = 0; i < r.nodes.size(); ++i) s += r.weights[i] * f(mid + half * r.nodes[i]);
    return half * s;
}

double adaptive_rec(const std::function<double(double)>& f, double a, double b, double tol,
                    const GaussRule& r, int depth, int max_depth) {
    const double coarse = gl_on(f, a, b, r);
    const double mid = 0.5 * (a + b);
    const double fine = gl_on(f, a, mid, r) + gl_on(f, mid, b, r);
    const double err = std::abs(fine - coarse);
    // The relative floor keeps halved tolerances from chasing rounding
    // noise on narrow subintervals.
    if (err <= tol || err <= 1e-14 * std::abs(fine) || b - a < 1e-14 * (1.0 + std::abs(a)))
        return fine;
    if (depth >= max_depth) throw std::runtime_error("integrate_adaptive: no convergence");
    return adaptive_rec(f, a, mid, 0.5 * tol, r, depth + 1, max_depth) +
           adaptive_rec(f, mid, b, 0.5 * tol, r, depth + 1, max_depth);
}

}  // namespace

const GaussRule& gauss_hermite_rule(int order) {
    if (order < 1) throw std::invalid_argument("gauss_hermite_rule: order < 1");
    if (order > 600) throw std::invalid_argument("gauss_hermite_rule: order capped at 600");
    return cached_rule(order, true);
}

const GaussRule& gauss_legendre_rule(int order) {
    if (order < 1) throw std::invalid_argument("gauss_legendre_rule: order < 1");
    return cached_rule(order, false);
}

double integrate_hermite_weighted(const std::function<double(double)>& f, int order) {
    const GaussRule& r = gauss_hermite_rule(order);
    double s = 0.0;
    for (std::size_t i = 0; i < r.nodes.size(); ++i) s += r.weights[i] * f(r.nodes[i]);
    return s;
}

double integrate_panels(const std::function<double(double)>& f, double a, double b, int panels,
                        int order) {
    const GaussRule& r = gauss_legendre_rule(order);
    const double w = (b - a) / panels;
    double s = 0.0;
    for (int p = 0; p < panels; ++p) s += gl_on(f, a + p * w, a + (p + 1) * w, r);
    return s;
}

double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double abs_tol, double rel_tol, int max_depth) {
    const GaussRule& r = gauss_legendre_rule(12);
    const double rough = std::abs(gl_on(f, a, b, r));
    const double tol = std::max(abs_tol, rel_tol * rough);
    return adaptive_rec(f, a, b, tol, r, 0, max_depth);
}

}  // namespace chaoslab

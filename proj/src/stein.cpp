#include "chaoslab/stein.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

#include "chaoslab/hermite.hpp"

namespace chaoslab {

namespace {
constexpr double kSqrtPiHalf = 1.2533141373155002512;  // sqrt(pi/2)
constexpr double kInvSqrt2 = 0.70710678118654752440;

double erfcx_cf(double x) {
    // Laplace continued fraction, accurate to <1e-16 for x >= 26.
    double t = 0.0;
    for (int k = 40; k >= 1; --k) t = (0.5 * k) / (x + t);
    return (1.0 / 1.7724538509055160273) / (x + t);
}
}  // namespace

double erfcx(double x) {
    if (x >= 26.0) return erfcx_cf(x);
    if (x >= 0.0) return std::exp(x * x) * std::erfc(x);
    return 2.0 * std::exp(x * x) - erfcx(-x);
}

double f_a_eval(double a, double x) {
    const double rho_a = kInvSqrt2Pi * std::exp(-0.5 * a * a);
    if (x >= a) {
        // rho_N(a) e^{x^2/2} int_x^inf e^{-y^2/2} dy
        if (x >= 0.0) return rho_a * kSqrtPiHalf * erfcx(x * kInvSqrt2);
        // a <= x < 0, so x^2 <= a^2 and the exponential stays <= 1.
        return std::exp(0.5 * (x * x - a * a)) - rho_a * kSqrtPiHalf * erfcx(-x * kInvSqrt2);
    }
    // -rho_N(a) e^{x^2/2} int_-inf^x e^{-y^2/2} dy
    if (x <= 0.0) return -rho_a * kSqrtPiHalf * erfcx(-x * kInvSqrt2);
    return -std::exp(0.5 * (x * x - a * a)) + rho_a * kSqrtPiHalf * erfcx(x * kInvSqrt2);
}

namespace {

// Projection of f_a: panels split at the jump; f_a decays like 1/x so the
// integrand has the phi tail beyond the turning point. Cached: the Stein
// batteries sweep the same (a, K) pairs many times.
SpectralRep fa_projection(double a, int truncation) {
    static std::map<std::pair<double, int>, SpectralRep> cache;
    static std::mutex mu;
    {
        std::lock_guard<std::mutex> g(mu);
        auto it = cache.find({a, truncation});
        if (it != cache.end()) return it->second;
    }
    ProjectOptions opts;
    opts.split_points = {a};
    ProjectionResult pr = project_function([a](double x) { return f_a_eval(a, x); }, truncation, opts);
    std::lock_guard<std::mutex> g(mu);
    return cache.emplace(std::make_pair(a, truncation), std::move(pr.rep)).first->second;
}

// x^j T by repeated ladder application (truncation drops by j).
SpectralRep mult_x_pow(SpectralRep t, int j) {
    for (int i = 0; i < j; ++i) t = ladder_mult_x(t);
    return t;
}

// H_k T through the exact monomial expansion of H_k.
SpectralRep mult_hermite_poly(const SpectralRep& t, int k) {
    const auto mono = hermite_poly_coeffs(k);
    const int K_out = t.truncation() - k;
    if (K_out < 0) throw std::invalid_argument("mult_hermite_poly: truncation too small");
    std::vector<double> acc(K_out + 1, 0.0);
    SpectralRep cur = t;
    for (int j = 0; j <= k; ++j) {
        if (j > 0) cur = ladder_mult_x(cur);
        if (mono[j] != 0.0)
            for (int n = 0; n <= K_out; ++n) acc[n] += mono[j] * cur.coeffs[n];
    }
    return SpectralRep(std::move(acc));
}

}  // namespace

SpectralRep f_an_coeffs(double a, int n, int truncation) {
    if (n < 0) throw std::invalid_argument("f_an_coeffs: n < 0");
    if (truncation < n + 8) throw std::invalid_argument("f_an_coeffs: truncation too small");
    const int K = truncation;
    if (n == 0) return fa_projection(a, K);

    const int K_work = K + n;  // every term lands at truncation K+1 or more
    std::vector<double> acc(K + 1, 0.0);
    const SpectralRep delta = delta_coeffs(a, K_work);
    for (int k = 0; k < n; ++k) {
        SpectralRep term = ladder_derivative_k(delta, n - 1 - k);  // truncation K_work-(n-1-k)
        term = mult_hermite_poly(term, k);                          // truncation K_work-n+1 = K+1
        for (int m = 0; m <= K; ++m) acc[m] += term.coeffs[m];
    }
    const SpectralRep fa = fa_projection(a, K);
    const double hna = hermite_poly(n, a);
    for (int m = 0; m <= K; ++m) acc[m] += hna * fa.coeffs[m];
    const double sign = (n % 2 == 0) ? 1.0 : -1.0;
    for (auto& c : acc) c *= sign;
    return SpectralRep(std::move(acc));
}

SteinSolution make_stein_solution(double a, int n, int truncation) {
    SteinSolution s;
    s.a = a;
    s.n = n;
    s.rep = f_an_coeffs(a, n, truncation);
    // The f_a part of f_{a,n} carries weight (-1)^n H_n(a); its jump at a
    // is exactly that weight (1 for n = 0).
    s.jump = (n == 0) ? 1.0 : ((n % 2 == 0) ? 1.0 : -1.0) * hermite_poly(n, a);
    return s;
}

SpectralRep stein_residual(double a, int n, int truncation) {
    if (truncation < n + 8) throw std::invalid_argument("stein_residual: truncation too small");
    const int K = truncation;
    const SpectralRep f = f_an_coeffs(a, n, K);
    const SpectralRep lhs = rep_axpy(1.0, ladder_derivative(f), -1.0, ladder_mult_x(f));

    SpectralRep dn_delta = ladder_derivative_k(delta_coeffs(a, K - 1 + n), n);  // truncation K-1
    const double sign = (n % 2 == 0) ? 1.0 : -1.0;
    const double rho_n_a = gaussian_density_derivative(n, a);
    const SpectralRep one = one_coeffs(K - 1);

    std::vector<double> res(K, 0.0);
    for (int m = 0; m < K; ++m)
        res[m] = lhs.coeffs[m] - sign * dn_delta.coeffs[m] + rho_n_a * one.coeffs[m];
    return SpectralRep(std::move(res));
}

double stein_residual_relnorm(double a, int n, int truncation) {
    const SpectralRep res = stein_residual(a, n, truncation);
    const SpectralRep rhs = ladder_derivative_k(delta_coeffs(a, truncation - 1 + n), n);
    const double alpha = -static_cast<double>(n) - 1.0;
    return s_alpha_norm(res, alpha) / s_alpha_norm(rhs, alpha);
}

std::pair<double, double> pairing_identity_check(double a, int n, int q, int truncation) {
    if (truncation < n + q + 8)
        throw std::invalid_argument("pairing_identity_check: truncation too small");
    const SpectralRep f = f_an_coeffs(a, n, truncation);
    // D^q of the rho_N rep has support on indices <= q; start high enough
    // that q ladder applications keep all of them.
    const SpectralRep rho_q = ladder_derivative_k(rho_normal_coeffs(2 * q + 2), q);
    const double lhs = pair_reps(f, rho_q);
    const double rhs = gaussian_density_derivative(n + q + 1, a) / (q + 1.0);
    return {lhs, rhs};
}

}  // namespace chaoslab

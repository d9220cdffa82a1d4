#include "chaoslab/hermite.hpp"

#include <cmath>
#include <functional>
#include <mutex>
#include <stdexcept>

#include "chaoslab/parallel.hpp"

namespace chaoslab {

namespace {
constexpr double kLnPi = 1.1447298858494001741;
constexpr double kLn2 = 0.69314718055994530942;
}  // namespace

double hermite_poly(int n, double x) {
    if (n < 0) throw std::invalid_argument("hermite_poly: n < 0");
    if (n == 0) return 1.0;
    double hm = 1.0, h = x;
    for (int k = 1; k < n; ++k) {
        const double hp = x * h - k * hm;
        hm = h;
        h = hp;
    }
    return h;
}

std::vector<double> hermite_poly_all(int n, double x) {
    std::vector<double> out(n + 1);
    out[0] = 1.0;
    if (n >= 1) out[1] = x;
    for (int k = 1; k < n; ++k) out[k + 1] = x * out[k] - k * out[k - 1];
    return out;
}

std::vector<double> hermite_poly_coeffs(int n) {
    if (n < 0) throw std::invalid_argument("hermite_poly_coeffs: n < 0");
    std::vector<double> prev{1.0};
    if (n == 0) return prev;
    std::vector<double> cur{0.0, 1.0};
    for (int k = 1; k < n; ++k) {
        std::vector<double> next(k + 2, 0.0);
        for (int j = 0; j <= k; ++j) next[j + 1] += cur[j];  // x H_k
        for (int j = 0; j < k; ++j) next[j] -= k * prev[j];  // -k H_{k-1}
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

namespace {

// Runs the normalized recurrence in scaled form y_n = phi_n(x) e^{-s}.
// phi_0 = pi^{-1/4} e^{-x^2/2} underflows past |x| ~ 38.5 while phi_n for
// 2n+1 > x^2 is O(n^{-1/4}); carrying the exponent separately keeps the
// whole sweep finite. s never exceeds 0 since |phi_n| < 1.
template <typename Emit>
void phi_scan(int n, double x, Emit&& emit) {
    double s = -0.5 * x * x;
    double ym = 0.0;
    double y = kPiQuarterInv;
    emit(0, y * std::exp(s));
    constexpr double kUp = 1e250, kDown = 1e-250, kLog = 575.6462732485114210;
    for (int k = 0; k < n; ++k) {
        const double yp =
            x * std::sqrt(2.0 / (k + 1)) * y - std::sqrt(static_cast<double>(k) / (k + 1)) * ym;
        ym = y;
        y = yp;
        const double m = std::max(std::abs(y), std::abs(ym));
        if (m > kUp) {
            y *= kDown;
            ym *= kDown;
            s += kLog;
        } else if (m < kDown && m > 0.0) {
            y *= kUp;
            ym *= kUp;
            s -= kLog;
        }
        emit(k + 1, y * std::exp(s));
    }
}

}  // namespace

double hermite_phi(int n, double x) {
    if (n < 0) throw std::invalid_argument("hermite_phi: n < 0");
    double out = 0.0;
    phi_scan(n, x, [&](int k, double v) {
        if (k == n) out = v;
    });
    return out;
}

std::vector<double> hermite_phi_all(int n, double x) {
    std::vector<double> out(n + 1);
    phi_scan(n, x, [&](int k, double v) { out[k] = v; });
    return out;
}

std::vector<double> hermite_phi_weightless_all(int n, double x) {
    std::vector<double> out(n + 1);
    out[0] = kPiQuarterInv;
    if (n >= 1) out[1] = x * std::sqrt(2.0) * out[0];
    for (int k = 1; k < n; ++k) {
        out[k + 1] = x * std::sqrt(2.0 / (k + 1)) * out[k] -
                     std::sqrt(static_cast<double>(k) / (k + 1)) * out[k - 1];
    }
    return out;
}

std::map<int, double> hermite_product_coeffs(int m, int n) {
    if (m < 0 || n < 0) throw std::invalid_argument("hermite_product_coeffs: negative order");
    std::map<int, double> out;
    const int jmax = std::min(m, n);
    double binm = 1.0, binn = 1.0, fact = 1.0;  // exact integers below 2^53
    for (int j = 0; j <= jmax; ++j) {
        if (j > 0) {
            binm *= static_cast<double>(m - j + 1) / j;
            binn *= static_cast<double>(n - j + 1) / j;
            fact *= j;
        }
        out[m + n - 2 * j] = std::round(binm) * std::round(binn) * fact;
    }
    return out;
}

double gauss_integral_phi(int n, double alpha) {
    if (n < 0) throw std::invalid_argument("gauss_integral_phi: n < 0");
    if (alpha < 0.0) throw std::invalid_argument("gauss_integral_phi: alpha < 0");
    if (n % 2 == 1) return 0.0;
    const int h = n / 2;
    const double num = 1.0 - 2.0 * alpha;
    if (num == 0.0 && h > 0) return 0.0;  // alpha = 1/2 annihilates even n >= 2
    double lg = 0.5 * kLn2 + 0.25 * kLnPi + 0.5 * std::lgamma(n + 1.0) - h * kLn2 -
                std::lgamma(h + 1.0) - 0.5 * std::log1p(2.0 * alpha);
    double sign = 1.0;
    if (h > 0) {
        const double ratio = num / (1.0 + 2.0 * alpha);
        if (ratio < 0.0 && h % 2 == 1) sign = -1.0;
        lg += h * std::log(std::abs(ratio));
    }
    return sign * std::exp(lg);
}

double gaussian_density_derivative(int j, double x) {
    if (j < 0) throw std::invalid_argument("gaussian_density_derivative: j < 0");
    const double rho = kInvSqrt2Pi * std::exp(-0.5 * x * x);
    const double sign = (j % 2 == 0) ? 1.0 : -1.0;
    return sign * hermite_poly(j, x) * rho;
}

const std::vector<double>& phi_sup_norms(int n_max) {
    static std::map<int, std::vector<double>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> g(mu);
    auto it = cache.find(n_max);
    if (it != cache.end()) return it->second;

    const double x_hi = std::sqrt(2.0 * n_max + 1.0) + 2.0;
    const int grid = static_cast<int>(x_hi / 6e-3) + 1;
    std::vector<double> sup(n_max + 1, 0.0);
    const int nw = worker_count();
    std::vector<std::vector<double>> partial(nw, std::vector<double>(n_max + 1, 0.0));
    parallel_for(0, nw, [&](std::int64_t w) {
        auto& loc = partial[w];
        for (int i = static_cast<int>(w); i <= grid; i += nw) {
            const double x = x_hi * i / grid;  // |phi_n(-x)| = |phi_n(x)|
            phi_scan(n_max, x, [&](int k, double v) {
                const double a = std::abs(v);
                if (a > loc[k]) loc[k] = a;
            });
        }
    });
    for (const auto& loc : partial)
        for (int k = 0; k <= n_max; ++k) sup[k] = std::max(sup[k], loc[k]);
    return cache.emplace(n_max, std::move(sup)).first->second;
}

}  // namespace chaoslab

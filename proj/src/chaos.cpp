#include "chaoslab/chaos.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "chaoslab/hermite.hpp"
#include "chaoslab/kstat.hpp"
#include "chaoslab/parallel.hpp"

namespace chaoslab {

ChaosSpec make_chaos_spec(int m, double nu, double hurst, std::int64_t n) {
    if (m < 2) throw std::invalid_argument("ChaosSpec: Hermite rank m must be >= 2");
    if (nu == 0.0) throw std::invalid_argument("ChaosSpec: nu must be nonzero");
    if (n < 1) throw std::invalid_argument("ChaosSpec: n must be >= 1");
    if (!(hurst > 0.0 && hurst < 1.0 - 0.5 / m))
        throw std::invalid_argument("ChaosSpec: H outside the Breuer-Major regime (0, 1-1/(2m))");
    return ChaosSpec{m, nu, hurst, n};
}

namespace {
double factorial(int k) {
    double f = 1.0;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
}
}  // namespace

double sigma_n2(const ChaosSpec& spec) {
    const CovarianceModel model{spec.hurst};
    const std::int64_t n = spec.n;
    double s = static_cast<double>(n);  // l = 0 term, rho^m = 1
    for (std::int64_t l = 1; l < n; ++l) s += 2.0 * (n - l) * std::pow(fgn_cov(model, l), spec.m);
    return spec.nu * spec.nu * factorial(spec.m) / static_cast<double>(n) * s;
}

double kappa3_exact(const ChaosSpec& spec) {
    if (spec.m % 2 == 1) return 0.0;  // odd chaos order kills the third moment
    const CovarianceModel model{spec.hurst};
    const std::int64_t n = spec.n;
    const int half = spec.m / 2;

    std::vector<double> rho_h(2 * n + 1);
    for (std::int64_t r = 0; r <= 2 * n; ++r) rho_h[r] = std::pow(fgn_cov(model, r), half);
    auto rh = [&](std::int64_t r) { return rho_h[std::llabs(r)]; };

    const int nw = worker_count();
    std::vector<double> part(nw, 0.0);
    parallel_for(0, nw, [&](std::int64_t w) {
        double acc = 0.0;
        for (std::int64_t u = -(n - 1) + w; u <= n - 1; u += nw) {
            const double ru = rh(u);
            if (ru == 0.0) continue;
            for (std::int64_t v = -(n - 1); v <= n - 1; ++v) {
                const std::int64_t lo = std::max<std::int64_t>({1, 1 - u, 1 + v});
                const std::int64_t hi = std::min<std::int64_t>({n, n - u, n + v});
                if (hi < lo) continue;
                acc += static_cast<double>(hi - lo + 1) * ru * rh(v) * rh(u + v);
            }
        }
        part[w] = acc;
    });
    double triple = 0.0;
    for (double p : part) triple += p;

    const double c_m = std::pow(factorial(spec.m), 3) / std::pow(factorial(half), 3);
    const double scale = spec.nu / (std::sqrt(static_cast<double>(n)) * std::sqrt(sigma_n2(spec)));
    return scale * scale * scale * c_m * triple;
}

CumulantRecord cumulants_mc(const ChaosSpec& spec, std::int64_t reps, std::uint64_t seed) {
    make_chaos_spec(spec.m, spec.nu, spec.hurst, spec.n);  // revalidate (H regime etc.)
    if (reps < 1000) throw std::invalid_argument("cumulants_mc: reps must be >= 1e3");
    const CovarianceModel model{spec.hurst};
    const FgnSampler sampler(model, spec.n);
    const double sigma_n = std::sqrt(sigma_n2(spec));
    const double scale = spec.nu / (std::sqrt(static_cast<double>(spec.n)) * sigma_n);

    std::vector<double> f(reps);
    const std::int64_t pairs = (reps + 1) / 2;
    parallel_for(
        0, pairs,
        [&](std::int64_t p) {
            thread_local std::vector<std::complex<double>> scratch;
            std::vector<double> a(spec.n), b(spec.n);
            sampler.sample_pair(seed, p, a.data(), b.data(), scratch);
            auto chaos_sum = [&](const std::vector<double>& path) {
                double s = 0.0;
                for (double x : path) s += hermite_poly(spec.m, x);
                return scale * s;
            };
            f[2 * p] = chaos_sum(a);
            if (2 * p + 1 < reps) f[2 * p + 1] = chaos_sum(b);
        },
        16);

    const KStatResult ks = k_statistics(f);
    CumulantRecord rec;
    rec.n = spec.n;
    rec.kappa3 = ks.k3;
    rec.kappa4 = ks.k4;
    rec.m_stat = std::max(std::abs(rec.kappa3), rec.kappa4);
    rec.se3 = ks.se3;
    rec.se4 = ks.se4;
    rec.method = "monte-carlo";
    return rec;
}

RateOrder predicted_exponent(int m, double hurst, RateQuantity which) {
    if (m < 2) throw std::invalid_argument("predicted_exponent: m must be >= 2");
    const double h_max = 1.0 - 0.5 / m;
    if (!(hurst > 0.0 && hurst < h_max))
        throw std::invalid_argument("predicted_exponent: H outside the Breuer-Major regime");
    const double H = hurst;
    // boundary H values are hit up to rounding (e.g. 2.0/3.0)
    auto at = [](double x, double b) { return std::abs(x - b) < 1e-12; };

    auto kappa3_order = [&]() -> RateOrder {
        if (m % 2 == 1) throw std::invalid_argument("predicted_exponent: kappa3 identically zero for odd m");
        const double b = 1.0 - 2.0 / (3.0 * m);
        if (at(H, b)) return {-0.5, 2};
        if (H < b) return {-0.5, 0};
        return {1.5 - 3.0 * m + 3.0 * m * H, 0};
    };
    auto kappa4_order = [&]() -> RateOrder {
        if (m <= 3) {
            const double b = 1.0 - 3.0 / (4.0 * m);
            if (at(H, b)) return {-1.0, 3};
            if (H < b) return {-1.0, 0};
            return {2.0 - 4.0 * m + 4.0 * m * H, 0};
        }
        const double b2 = 1.0 - 0.5 / (m - 1);
        if (at(H, 0.75)) return {-1.0, 1};
        if (H < 0.75) return {-1.0, 0};
        if (at(H, b2)) return {4.0 * H - 4.0, 2};
        if (H < b2) return {4.0 * H - 4.0, 0};
        return {2.0 - 4.0 * m + 4.0 * m * H, 0};
    };

    switch (which) {
        case RateQuantity::kappa3:
            return kappa3_order();
        case RateQuantity::kappa4:
            return kappa4_order();
        case RateQuantity::M:
            break;
    }

    // M(F_n) = max(|kappa3|, kappa4): the slower-decaying order wins.
    if (m == 2) {
        if (at(H, 2.0 / 3.0)) return {-0.5, 2};
        if (H < 2.0 / 3.0) return {-0.5, 0};
        return {-4.5 + 6.0 * H, 0};
    }
    if (m == 3) return kappa4_order();  // kappa3 vanishes
    if (m == 4) {
        if (at(H, 5.0 / 6.0)) return {-0.5, 2};
        if (H < 5.0 / 6.0) return {-0.5, 0};
        return {-10.5 + 12.0 * H, 0};
    }
    if (m % 2 == 1) return kappa4_order();
    // even m >= 6
    const double b2 = (6.0 * m - 11.0) / (6.0 * m - 8.0);
    if (H < 0.875) return {-0.5, 0};
    if (H <= b2) return {4.0 * H - 4.0, 0};
    return {1.5 - 3.0 * m + 3.0 * m * H, 0};
}

std::string cumulant_record_csv_header() { return "m,H,n,method,kappa3,se3,kappa4,se4,m_stat"; }

std::string cumulant_record_csv_row(const ChaosSpec& spec, const CumulantRecord& rec) {
    std::ostringstream os;
    os.precision(17);
    os << spec.m << ',' << spec.hurst << ',' << rec.n << ',' << rec.method << ',' << rec.kappa3
       << ',' << rec.se3 << ',' << rec.kappa4 << ',' << rec.se4 << ',' << rec.m_stat;
    return os.str();
}

}  // namespace chaoslab

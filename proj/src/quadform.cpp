#include "chaoslab/quadform.hpp"

#include <cmath>
#include <complex>
#include <map>
#include <mutex>
#include <stdexcept>

#include "chaoslab/fft.hpp"
#include "chaoslab/linalg.hpp"
#include "chaoslab/parallel.hpp"

namespace chaoslab {

namespace {

std::vector<double> eigenvalues_cached(const CovarianceModel& model, std::int64_t n) {
    static std::map<std::pair<double, std::int64_t>, std::vector<double>> cache;
    static std::mutex mu;
    {
        std::lock_guard<std::mutex> g(mu);
        auto it = cache.find({model.hurst, n});
        if (it != cache.end()) return it->second;
    }
    std::vector<double> eig;
    double max_off = 0.0;
    for (std::int64_t r = 1; r < n; ++r) max_off = std::max(max_off, std::abs(fgn_cov(model, r)));
    if (max_off < 1e-15) {
        eig.assign(n, 1.0);  // H = 1/2: Sigma_n is the identity
    } else {
        if (n > 4096) throw std::invalid_argument("make_quadform_spec: n > 4096 needs the trace route");
        eig = sym_eigenvalues(toeplitz_cov(model, n), static_cast<std::size_t>(n));
    }
    std::lock_guard<std::mutex> g(mu);
    return cache.emplace(std::make_pair(model.hurst, n), std::move(eig)).first->second;
}

double factorial(int k) {
    double f = 1.0;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
}

std::vector<double> cumulants_from_traces(const std::vector<double>& trace_pow, std::int64_t n,
                                          double nu, int p_max) {
    // trace_pow[p-1] = sum lambda^p
    const double sigma_n2 = 2.0 * nu * nu * trace_pow[1] / static_cast<double>(n);
    const double c = nu / (std::sqrt(static_cast<double>(n)) * std::sqrt(sigma_n2));
    std::vector<double> out;
    for (int p = 2; p <= p_max; ++p)
        out.push_back(std::pow(2.0, p - 1) * factorial(p - 1) * std::pow(c, p) * trace_pow[p - 1]);
    return out;
}

}  // namespace

QuadFormSpec make_quadform_spec(const CovarianceModel& model, std::int64_t n, double nu) {
    if (n < 1) throw std::invalid_argument("make_quadform_spec: n < 1");
    if (nu == 0.0) throw std::invalid_argument("make_quadform_spec: nu = 0");
    QuadFormSpec spec;
    spec.hurst = model.hurst;
    spec.n = n;
    spec.nu = nu;
    spec.eigs = eigenvalues_cached(model, n);
    double s2 = 0.0;
    for (double l : spec.eigs) s2 += l * l;
    spec.sigma_n2 = 2.0 * nu * nu * s2 / static_cast<double>(n);
    return spec;
}

std::vector<double> exact_cumulants_m2(const QuadFormSpec& spec, int p_max) {
    if (p_max < 2 || p_max > 8) throw std::invalid_argument("exact_cumulants_m2: p_max must be in [2,8]");
    if (spec.eigs.empty()) throw std::invalid_argument("exact_cumulants_m2: eigs not populated");
    std::vector<double> trace_pow(p_max, 0.0);
    for (double l : spec.eigs) {
        double lp = l;
        for (int p = 1; p <= p_max; ++p) {
            trace_pow[p - 1] += lp;
            lp *= l;
        }
    }
    return cumulants_from_traces(trace_pow, spec.n, spec.nu, p_max);
}

std::vector<double> toeplitz_trace_powers(const CovarianceModel& model, std::int64_t n, int p_max) {
    if (p_max < 1 || p_max > 4) throw std::invalid_argument("toeplitz_trace_powers: p_max in [1,4]");
    // rho table out to lag 2n (entries beyond n-1 only feed cancelling
    // prefix terms in the p = 4 scheme).
    std::vector<double> rho(2 * n + 1);
    for (std::int64_t r = 0; r <= 2 * n; ++r) rho[r] = fgn_cov(model, r);
    auto rho_at = [&](std::int64_t r) { return rho[std::llabs(r)]; };

    std::vector<double> tr(p_max, 0.0);
    tr[0] = static_cast<double>(n);
    if (p_max >= 2) {
        double s = static_cast<double>(n);  // lag 0
        for (std::int64_t l = 1; l < n; ++l) s += 2.0 * (n - l) * rho[l] * rho[l];
        tr[1] = s;
    }
    if (p_max >= 3) {
        // tr Sigma^3 = sum_{u,v} N3(u,v) rho(u) rho(v) rho(u+v), N3 the
        // number of index triples with pairwise lags (u, v).
        const int nw = worker_count();
        std::vector<double> part(nw, 0.0);
        parallel_for(0, nw, [&](std::int64_t w) {
            double acc = 0.0;
            for (std::int64_t u = -(n - 1) + w; u <= n - 1; u += nw) {
                const double ru = rho_at(u);
                if (ru == 0.0) continue;
                for (std::int64_t v = -(n - 1); v <= n - 1; ++v) {
                    const std::int64_t lo = std::max<std::int64_t>({1, 1 - u, 1 + v});
                    const std::int64_t hi = std::min<std::int64_t>({n, n - u, n + v});
                    if (hi < lo) continue;
                    acc += static_cast<double>(hi - lo + 1) * ru * rho_at(v) * rho_at(u + v);
                }
            }
            part[w] = acc;
        });
        for (double p : part) tr[2] += p;
    }
    if (p_max >= 4) {
        // tr Sigma^4 = ||Sigma^2||_F^2. Row (l+d, l) of Sigma^2 is a
        // windowed correlation sum_{s=1-l}^{n-l} rho(d-s) rho(s); sweep
        // each diagonal d with prefix sums over s.
        const int nw = worker_count();
        std::vector<double> part(nw, 0.0);
        parallel_for(0, nw, [&](std::int64_t w) {
            std::vector<double> prefix(2 * n);  // prefix[t+n-1] = sum_{s=-(n-1)}^{t}
            double acc = 0.0;
            for (std::int64_t d = w; d <= n - 1; d += nw) {
                double run = 0.0;
                for (std::int64_t s = -(n - 1); s <= n - 1; ++s) {
                    run += rho_at(d - s) * rho_at(s);
                    prefix[s + n - 1] = run;
                }
                auto pre = [&](std::int64_t t) { return t < -(n - 1) ? 0.0 : prefix[t + n - 1]; };
                double diag_sum = 0.0;
                const std::int64_t l_lo = std::max<std::int64_t>(1, 1 - d);
                const std::int64_t l_hi = std::min<std::int64_t>(n, n - d);
                for (std::int64_t l = l_lo; l <= l_hi; ++l) {
                    const double b = pre(n - l) - pre(-l);
                    diag_sum += b * b;
                }
                acc += (d == 0) ? diag_sum : 2.0 * diag_sum;  // Sigma^2 symmetric
            }
            part[w] = acc;
        });
        for (double p : part) tr[3] += p;
    }
    return tr;
}

std::vector<double> exact_cumulants_m2_toeplitz(const CovarianceModel& model, std::int64_t n,
                                                double nu, int p_max) {
    if (p_max < 2 || p_max > 4)
        throw std::invalid_argument("exact_cumulants_m2_toeplitz: p_max must be in [2,4]");
    if (nu == 0.0) throw std::invalid_argument("exact_cumulants_m2_toeplitz: nu = 0");
    return cumulants_from_traces(toeplitz_trace_powers(model, n, p_max), n, nu, p_max);
}

DensityCurve exact_density_m2(const QuadFormSpec& spec, const Grid& grid, int deriv_order) {
    if (deriv_order < 0 || deriv_order > 4)
        throw std::invalid_argument("exact_density_m2: derivative order beyond 4 unsupported");
    if (grid.x_max != -grid.x_min || (grid.x_max != 8.0 && grid.x_max != 16.0 && grid.x_max != 32.0))
        throw std::invalid_argument("exact_density_m2: grid must be [-X, X] with X in {8, 16, 32}");
    const int np1 = grid.npoints - 1;
    if (np1 < 512 * static_cast<int>(grid.x_max) || (np1 & (np1 - 1)) != 0)
        throw std::invalid_argument("exact_density_m2: grid too coarse (need 2^k+1 points, >=256/unit)");
    if (spec.eigs.empty() || spec.sigma_n2 <= 0.0)
        throw std::invalid_argument("exact_density_m2: spec not populated");

    const double c = spec.nu / (std::sqrt(static_cast<double>(spec.n)) * std::sqrt(spec.sigma_n2));
    const double L = 64.0;  // inversion period; second-chaos tails beyond it are negligible

    auto log_abs_phi = [&](double t) {
        double s = 0.0;
        for (double l : spec.eigs) s += std::log1p(4.0 * c * c * t * t * l * l);
        return -0.25 * s;
    };

    // The top quarter of the band is tapered with a raised cosine: a hard
    // cutoff rings with amplitude |phi(t_max)|/(pi d) at distance d from
    // the support edge, which heavy-tailed small-n characteristic
    // functions cannot push below tolerance at any feasible FFT size.
    std::int64_t N = static_cast<std::int64_t>(np1) * static_cast<std::int64_t>(L / (2.0 * grid.x_max)) * 2;
    const std::int64_t N_max = 1 << 22;
    for (;; N *= 2) {
        const double t_taper = 0.75 * M_PI * N / L;
        const double la = log_abs_phi(t_taper);
        if (la < std::log(1e-13)) break;
        if (N == N_max && la < std::log(2e-2)) break;  // tapered heavy-tail mode
        if (N * 2 > N_max)
            throw std::runtime_error("exact_density_m2: characteristic function tail too heavy");
    }

    const double dt = 2.0 * M_PI / L;
    double eig_lo = spec.eigs[0], eig_hi = spec.eigs[0];
    for (double l : spec.eigs) {
        eig_lo = std::min(eig_lo, l);
        eig_hi = std::max(eig_hi, l);
    }
    const bool uniform_eigs = (eig_hi - eig_lo) == 0.0;  // H = 1/2 fast path
    std::vector<std::complex<double>> buf(N);
    parallel_for(
        0, N,
        [&](std::int64_t k) {
            const double t = dt * (k < N / 2 ? static_cast<double>(k) : static_cast<double>(k - N));
            std::complex<double> w(0.0, 0.0);
            if (uniform_eigs) {
                w = static_cast<double>(spec.n) *
                    std::log(std::complex<double>(1.0, -2.0 * c * t * spec.eigs[0]));
            } else {
                for (double l : spec.eigs) w += std::log(std::complex<double>(1.0, -2.0 * c * t * l));
            }
            std::complex<double> lphi =
                std::complex<double>(0.0, -t * c * static_cast<double>(spec.n)) - 0.5 * w;
            std::complex<double> val = std::exp(lphi);
            // derivative factor (-i t)^j
            for (int j = 0; j < deriv_order; ++j) val *= std::complex<double>(0.0, -t);
            const double t_max = M_PI * N / L;
            const double at = std::abs(t);
            if (at > 0.75 * t_max) {
                const double u = (at - 0.75 * t_max) / (0.25 * t_max);
                val *= 0.5 * (1.0 + std::cos(M_PI * u));
            }
            if (k % 2 != 0) val = -val;  // e^{i pi k}: grid offset -L/2
            // Nyquist bin stands for both +-t_max; keeping only the real
            // part is the symmetric trapezoid treatment and preserves the
            // Hermitian symmetry of the sample vector.
            if (k == N / 2) val = std::complex<double>(val.real(), 0.0);
            buf[k] = val;
        },
        1024);

    Fft fft(N);
    fft.forward(buf.data());

    // Sanity detector for the branch-safe product: phi(0) = 1 and the
    // inverted curve must be essentially real.
    double max_imag = 0.0;
    for (std::int64_t i = 0; i < N; ++i) max_imag = std::max(max_imag, std::abs(buf[i].imag()));
    if (max_imag / L > 1e-8)
        throw std::runtime_error("exact_density_m2: inversion produced complex mass (branch failure)");

    DensityCurve out = make_curve(grid, deriv_order, CurveSource::exact);
    // fine step L/N; requested step 2 x_max / np1; offsets are exact
    // because all sizes are powers of two
    const std::int64_t stride = N * static_cast<std::int64_t>(grid.x_max) / (np1 * 32);
    const std::int64_t i0 = static_cast<std::int64_t>(32.0 - grid.x_max) * N / 64;
    for (int i = 0; i < grid.npoints; ++i)
        out.values[i] = buf[(i0 + stride * i) % N].real() / L;  // x = L/2 wraps to -L/2
    return out;
}

}  // namespace chaoslab

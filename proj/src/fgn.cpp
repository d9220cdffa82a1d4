#include "chaoslab/fgn.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "chaoslab/parallel.hpp"
#include "chaoslab/rng.hpp"

namespace chaoslab {

CovarianceModel make_fgn_model(double hurst) {
    if (!(hurst > 0.0 && hurst < 1.0)) throw std::invalid_argument("hurst must lie in (0,1)");
    return CovarianceModel{hurst};
}

double fgn_cov(const CovarianceModel& model, std::int64_t r) {
    if (r == 0) return 1.0;
    const double ar = std::abs(static_cast<double>(r));
    const double h2 = 2.0 * model.hurst;
    return 0.5 * (std::pow(ar + 1.0, h2) - 2.0 * std::pow(ar, h2) + std::pow(ar - 1.0, h2));
}

std::vector<double> toeplitz_cov(const CovarianceModel& model, std::int64_t n) {
    if (n < 1) throw std::invalid_argument("toeplitz_cov: n < 1");
    std::vector<double> rho(n);
    for (std::int64_t r = 0; r < n; ++r) rho[r] = fgn_cov(model, r);
    std::vector<double> sigma(n * n);
    for (std::int64_t i = 0; i < n; ++i)
        for (std::int64_t j = 0; j < n; ++j) sigma[i * n + j] = rho[std::llabs(i - j)];
    return sigma;
}

FgnSampler::FgnSampler(const CovarianceModel& model, std::int64_t n) : n_(n) {
    if (n < 1) throw std::invalid_argument("FgnSampler: n < 1");
    std::int64_t m = std::max<std::int64_t>(2, 2 * (n - 1));
    for (int attempt = 0;; ++attempt) {
        // First column of the circulant embedding of Sigma_n.
        std::vector<std::complex<double>> col(m);
        for (std::int64_t j = 0; j <= m / 2; ++j) col[j] = fgn_cov(model, j);
        for (std::int64_t j = m / 2 + 1; j < m; ++j) col[j] = fgn_cov(model, m - j);
        Fft fft(m);
        fft.forward(col.data());

        double max_eig = 0.0, min_eig = 0.0;
        for (const auto& c : col) {
            max_eig = std::max(max_eig, c.real());
            min_eig = std::min(min_eig, c.real());
        }
        const double tol_embed = 1e-10 * max_eig;
        if (min_eig < -tol_embed) {
            if (attempt >= 6)
                throw std::runtime_error("FgnSampler: embedding eigenvalue " + std::to_string(min_eig) +
                                         " below -tol_embed at size " + std::to_string(m));
            m *= 2;
            continue;
        }
        if (min_eig < 0.0)
            std::fprintf(stderr, "chaoslab: fgn embedding clipped eigenvalue %g to 0 (size %lld)\n",
                         min_eig, static_cast<long long>(m));
        m_ = m;
        sqrt_eig_over_m_.resize(m);
        for (std::int64_t k = 0; k < m; ++k)
            sqrt_eig_over_m_[k] = std::sqrt(std::max(0.0, col[k].real()) / static_cast<double>(m));
        fft_ = std::make_unique<Fft>(m);
        return;
    }
}

void FgnSampler::sample_pair(std::uint64_t seed, std::int64_t pair, double* path_a,
                             double* path_b) const {
    std::vector<std::complex<double>> buf;
    sample_pair(seed, pair, path_a, path_b, buf);
}

void FgnSampler::sample_pair(std::uint64_t seed, std::int64_t pair, double* path_a, double* path_b,
                             std::vector<std::complex<double>>& buf) const {
    Xoshiro256pp rng(seed, static_cast<std::uint64_t>(pair));
    buf.resize(m_);
    for (std::int64_t k = 0; k < m_; ++k) {
        const double re = rng.normal();
        const double im = rng.normal();
        buf[k] = std::complex<double>(re * sqrt_eig_over_m_[k], im * sqrt_eig_over_m_[k]);
    }
    fft_->forward(buf.data());
    for (std::int64_t i = 0; i < n_; ++i) {
        path_a[i] = buf[i].real();
        path_b[i] = buf[i].imag();
    }
}

PathBatch fgn_sample(const CovarianceModel& model, std::int64_t n, std::int64_t count,
                     std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("fgn_sample: n < 1");
    if (count < 1) throw std::invalid_argument("fgn_sample: count < 1");
    FgnSampler sampler(model, n);
    PathBatch batch;
    batch.n = n;
    batch.count = count;
    batch.seed = seed;
    batch.data.resize(n * count);
    const std::int64_t pairs = (count + 1) / 2;
    parallel_for(
        0, pairs,
        [&](std::int64_t p) {
            std::vector<double> a(n), b(n);
            sampler.sample_pair(seed, p, a.data(), b.data());
            std::copy(a.begin(), a.end(), batch.data.begin() + 2 * p * n);
            if (2 * p + 1 < count)
                std::copy(b.begin(), b.end(), batch.data.begin() + (2 * p + 1) * n);
        },
        8);
    return batch;
}

void path_batch_to_csv(const PathBatch& batch, const std::string& path) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open " + path);
    os.precision(17);
    for (std::int64_t p = 0; p < batch.count; ++p) {
        for (std::int64_t i = 0; i < batch.n; ++i) {
            if (i) os << ',';
            os << batch.at(p, i);
        }
        os << '\n';
    }
}

}  // namespace chaoslab

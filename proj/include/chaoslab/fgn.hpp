#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "chaoslab/fft.hpp"

namespace chaoslab {

// Stationary covariance of fractional Gaussian noise with Hurst index H.
struct CovarianceModel {
    double hurst;
};

CovarianceModel make_fgn_model(double hurst);  // validates H in (0,1)

// rho(r) = (|r+1|^{2H} - 2|r|^{2H} + |r-1|^{2H}) / 2.
double fgn_cov(const CovarianceModel& model, std::int64_t r);

// Sigma_n[i][j] = rho(|i-j|), dense row-major.
std::vector<double> toeplitz_cov(const CovarianceModel& model, std::int64_t n);

struct PathBatch {
    std::int64_t n = 0;
    std::int64_t count = 0;
    std::uint64_t seed = 0;
    std::vector<double> data;  // row-major count x n

    double at(std::int64_t path, std::int64_t i) const { return data[path * n + i]; }
};

// Exact sampler by circulant embedding (embedding size 2(n-1), doubled
// until the embedding spectrum is nonnegative). Eigenvalues in
// [-tol_embed, 0) with tol_embed = 1e-10 * max eigenvalue are clipped to
// zero with a logged warning; anything below fails with a diagnostic.
// One FFT yields two independent paths (real/imaginary parts); path pair
// p draws from an rng seeded by (seed, p), so batches are reproducible
// and independent of the worker count.
// PRNG: xoshiro256++ seeded via splitmix64, normals by Box-Muller.
class FgnSampler {
  public:
    FgnSampler(const CovarianceModel& model, std::int64_t n);

    std::int64_t n() const { return n_; }
    std::int64_t embedding_size() const { return m_; }

    // Fills two independent length-n paths for pair index `pair`.
    void sample_pair(std::uint64_t seed, std::int64_t pair, double* path_a, double* path_b) const;

    // Hot-path variant with a caller-owned scratch buffer (resized to the
    // embedding size on first use).
    void sample_pair(std::uint64_t seed, std::int64_t pair, double* path_a, double* path_b,
                     std::vector<std::complex<double>>& scratch) const;

  private:
    std::int64_t n_;
    std::int64_t m_;
    std::vector<double> sqrt_eig_over_m_;
    std::unique_ptr<Fft> fft_;
};

PathBatch fgn_sample(const CovarianceModel& model, std::int64_t n, std::int64_t count,
                     std::uint64_t seed);

// CSV export, one row per path.
void path_batch_to_csv(const PathBatch& batch, const std::string& path);

}  // namespace chaoslab

#pragma once

#include <complex>
#include <cstddef>
#include <memory>
#include <vector>

namespace chaoslab {

// Thin wrapper over FFTW (complex, double, any length). Plan creation is
// serialized internally; transform() may be called concurrently on distinct
// buffers. Plans use FFTW_ESTIMATE so results are run-to-run reproducible.
class Fft {
  public:
    explicit Fft(std::size_t n);
    ~Fft();
    Fft(const Fft&) = delete;
    Fft& operator=(const Fft&) = delete;

    std::size_t size() const { return n_; }
    // In-place unnormalized DFT: X_k = sum_j x_j e^{-2 pi i jk/n} (forward).
    void forward(std::complex<double>* data) const;
    void inverse(std::complex<double>* data) const;  // unnormalized

  private:
    std::size_t n_;
    void* plan_fwd_;
    void* plan_inv_;
};

inline void fft_forward(std::vector<std::complex<double>>& v) {
    Fft plan(v.size());
    plan.forward(v.data());
}

}  // namespace chaoslab

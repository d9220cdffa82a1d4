#include "chaoslab/fft.hpp"

#include <fftw3.h>

#include <mutex>

namespace chaoslab {

namespace {
std::mutex& planner_mutex() {
    static std::mutex mu;
    return mu;
}
}  // namespace

Fft::Fft(std::size_t n) : n_(n) {
    std::lock_guard<std::mutex> g(planner_mutex());
    // Planning against a scratch buffer; execution uses fftw_execute_dft on
    // caller buffers, which is the FFTW-sanctioned thread-safe path.
    fftw_complex* scratch = fftw_alloc_complex(n);
    plan_fwd_ = fftw_plan_dft_1d(static_cast<int>(n), scratch, scratch, FFTW_FORWARD, FFTW_ESTIMATE);
    plan_inv_ = fftw_plan_dft_1d(static_cast<int>(n), scratch, scratch, FFTW_BACKWARD, FFTW_ESTIMATE);
    fftw_free(scratch);
}

Fft::~Fft() {
    std::lock_guard<std::mutex> g(planner_mutex());
    fftw_destroy_plan(static_cast<fftw_plan>(plan_fwd_));
    fftw_destroy_plan(static_cast<fftw_plan>(plan_inv_));
}

void Fft::forward(std::complex<double>* data) const {
    fftw_complex* d = reinterpret_cast<fftw_complex*>(data);
    fftw_execute_dft(static_cast<fftw_plan>(plan_fwd_), d, d);
}

void Fft::inverse(std::complex<double>* data) const {
    fftw_complex* d = reinterpret_cast<fftw_complex*>(data);
    fftw_execute_dft(static_cast<fftw_plan>(plan_inv_), d, d);
}

}  // namespace chaoslab

#include "chaoslab/linalg.hpp"

#include <lapacke.h>

#include <stdexcept>
#include <string>

namespace chaoslab {

std::vector<double> sym_eigenvalues(const std::vector<double>& a, std::size_t n) {
    if (a.size() != n * n) throw std::invalid_argument("sym_eigenvalues: size mismatch");
    std::vector<double> work(a);
    std::vector<double> w(n);
    lapack_int info = LAPACKE_dsyev(LAPACK_ROW_MAJOR, 'N', 'U', static_cast<lapack_int>(n),
                                    work.data(), static_cast<lapack_int>(n), w.data());
    if (info != 0) throw std::runtime_error("dsyev failed, info=" + std::to_string(info));
    return w;
}

std::vector<double> sym_tridiag_eigenvalues(std::vector<double> d, std::vector<double> e,
                                            std::vector<double>* first_components) {
    const lapack_int n = static_cast<lapack_int>(d.size());
    if (e.size() + 1 != d.size()) throw std::invalid_argument("sym_tridiag_eigenvalues: size mismatch");
    lapack_int info;
    if (!first_components) {
        info = LAPACKE_dstev(LAPACK_ROW_MAJOR, 'N', n, d.data(), e.data(), nullptr, n);
    } else {
        std::vector<double> z(static_cast<std::size_t>(n) * n);
        info = LAPACKE_dstev(LAPACK_ROW_MAJOR, 'V', n, d.data(), e.data(), z.data(), n);
        if (info == 0) {
            first_components->resize(n);
            for (lapack_int j = 0; j < n; ++j) (*first_components)[j] = z[static_cast<std::size_t>(j)];
        }
    }
    if (info != 0) throw std::runtime_error("dstev failed, info=" + std::to_string(info));
    return d;
}

}  // namespace chaoslab

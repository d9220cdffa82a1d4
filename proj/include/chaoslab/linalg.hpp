#pragma once

#include <cstdint>
#include <vector>

namespace chaoslab {

// Eigenvalues (ascending) of a dense symmetric matrix given in row-major
// order. The input copy is destroyed internally.
std::vector<double> sym_eigenvalues(const std::vector<double>& a, std::size_t n);

// Eigen-decomposition of a symmetric tridiagonal matrix with diagonal d
// (size n) and off-diagonal e (size n-1). Returns eigenvalues ascending;
// if first_components != nullptr it receives the first component of each
// (unit) eigenvector, as needed by Golub-Welsch quadrature rules.
std::vector<double> sym_tridiag_eigenvalues(std::vector<double> d, std::vector<double> e,
                                            std::vector<double>* first_components = nullptr);

}  // namespace chaoslab

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "chaoslab/linalg.hpp"
#include "chaoslab/quadrature.hpp"

using namespace chaoslab;

TEST_CASE("gauss-hermite integrates gaussian moments exactly") {
    // int x^{2k} e^{-x^2} = sqrt(pi) (2k-1)!! / 2^k
    const double sqrt_pi = std::sqrt(M_PI);
    CHECK(integrate_hermite_weighted([](double) { return 1.0; }, 20) == doctest::Approx(sqrt_pi).epsilon(1e-14));
    CHECK(integrate_hermite_weighted([](double x) { return x * x; }, 20) ==
          doctest::Approx(0.5 * sqrt_pi).epsilon(1e-14));
    CHECK(integrate_hermite_weighted([](double x) { return std::pow(x, 8); }, 20) ==
          doctest::Approx(105.0 / 16.0 * sqrt_pi).epsilon(1e-13));
    // order 5 still integrates degree 8 (exact through degree 9)
    CHECK(integrate_hermite_weighted([](double x) { return std::pow(x, 8); }, 5) ==
          doctest::Approx(105.0 / 16.0 * sqrt_pi).epsilon(1e-12));
}

TEST_CASE("gauss-hermite order cap") {
    CHECK_THROWS_AS(gauss_hermite_rule(601), std::invalid_argument);
    CHECK_NOTHROW(gauss_hermite_rule(600));
}

TEST_CASE("gauss-legendre panels and adaptive agree on a smooth integral") {
    auto f = [](double x) { return std::exp(-x * x / 3.0) * std::cos(2.0 * x); };
    const double a = integrate_adaptive(f, -10.0, 10.0, 1e-13, 1e-13);
    const double b = integrate_panels(f, -10.0, 10.0, 200, 12);
    CHECK(a == doctest::Approx(b).epsilon(1e-12));
    // reference: int e^{-x^2/3} cos(2x) = sqrt(3 pi) e^{-3}
    CHECK(a == doctest::Approx(std::sqrt(3.0 * M_PI) * std::exp(-3.0)).epsilon(1e-12));
}

TEST_CASE("adaptive integrator reports non-convergence") {
    auto f = [](double x) { return 1.0 / std::sqrt(std::abs(x) + 1e-300); };
    CHECK_THROWS_AS(integrate_adaptive(f, -1.0, 1.0, 1e-13, 1e-13, 8), std::runtime_error);
}

TEST_CASE("tridiagonal eigenvalues: known spectrum") {
    // second-difference matrix: eigenvalues 2 - 2 cos(k pi / (n+1))
    const int n = 64;
    std::vector<double> d(n, 2.0), e(n - 1, -1.0);
    const auto eig = sym_tridiag_eigenvalues(d, e);
    for (int k = 1; k <= n; ++k)
        CHECK(eig[k - 1] == doctest::Approx(2.0 - 2.0 * std::cos(k * M_PI / (n + 1))).epsilon(1e-12));
}

TEST_CASE("dense symmetric eigenvalues: trace identities on a random matrix") {
    const int n = 40;
    std::vector<double> a(n * n);
    unsigned s = 12345u;
    auto rnd = [&] {
        s = 1664525u * s + 1013904223u;
        return (s >> 8) * (1.0 / (1 << 24)) - 0.5;
    };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= i; ++j) a[i * n + j] = a[j * n + i] = rnd();
    const auto eig = sym_eigenvalues(a, n);
    double tr = 0.0, fro = 0.0, sum1 = 0.0, sum2 = 0.0;
    for (int i = 0; i < n; ++i) tr += a[i * n + i];
    for (double v : a) fro += v * v;
    for (double l : eig) {
        sum1 += l;
        sum2 += l * l;
    }
    CHECK(sum1 == doctest::Approx(tr).epsilon(1e-11));
    CHECK(sum2 == doctest::Approx(fro).epsilon(1e-11));
}

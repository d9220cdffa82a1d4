#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "chaoslab/hermite.hpp"
#include "chaoslab/quadrature.hpp"
#include "chaoslab/spectral.hpp"
#include "chaoslab/stein.hpp"

using namespace chaoslab;

TEST_CASE("erfcx against quadrature and symmetry") {
    // erfcx(x) = 2 e^{x^2} / sqrt(pi) int_x^inf e^{-y^2} dy; the integrand
    // lives on a boundary layer of width ~ 1/(2x)
    for (double x : {0.0, 0.5, 3.0, 10.0, 25.9, 26.1, 30.0}) {
        const double hi = x + 2.0 + 6.0 / (1.0 + x);
        const double tail = integrate_adaptive(
            [x](double y) { return std::exp(-(y * y - x * x)); }, x, hi, 1e-16, 1e-13);
        CHECK(erfcx(x) == doctest::Approx(2.0 / std::sqrt(M_PI) * tail).epsilon(1e-11));
    }
    CHECK(erfcx(-1.0) == doctest::Approx(2.0 * std::exp(1.0) - erfcx(1.0)).epsilon(1e-14));
}

TEST_CASE("f_a jump is exactly one") {
    for (double a : {-2.0, 0.0, 1.5}) {
        const double jump = f_a_eval(a, a + 1e-13) - f_a_eval(a, a - 1e-13);
        CHECK(jump == doctest::Approx(1.0).epsilon(1e-9));
        CHECK(make_stein_solution(a, 0, 50).jump == 1.0);
    }
}

TEST_CASE("f_a bounds, decay, and overflow safety") {
    double sup = 0.0;
    for (double x = -38.0; x <= 38.0; x += 0.005) sup = std::max(sup, std::abs(f_a_eval(0.0, x)));
    CHECK(sup <= 1.0 + 1e-12);
    CHECK(std::isfinite(f_a_eval(0.0, 38.0)));
    CHECK(std::isfinite(f_a_eval(0.0, -38.0)));
    CHECK(std::isfinite(f_a_eval(-37.0, -36.0)));
    for (double a : {-1.0, 0.0, 2.5}) {
        const double x0 = std::max(1.0, std::abs(a)) + 1.0;
        for (double x = x0 + 0.01; x < 35.0; x += 1.1) {
            CHECK(std::abs(f_a_eval(a, x)) <= 1.0 / x);
            CHECK(std::abs(f_a_eval(a, -x)) <= 1.0 / x);
        }
    }
}

TEST_CASE("f_a satisfies the pointwise equation off the jump") {
    const double h = 1e-6;
    for (double a : {-1.0, 0.7}) {
        for (double x : {-3.0, -0.5, 0.2, 1.9, 4.0}) {
            if (std::abs(x - a) < 0.1) continue;
            const double fd = (f_a_eval(a, x + h) - f_a_eval(a, x - h)) / (2.0 * h);
            const double resid = fd - x * f_a_eval(a, x) + kInvSqrt2Pi * std::exp(-0.5 * a * a);
            CHECK(std::abs(resid) < 1e-7);
        }
    }
}

TEST_CASE("f_{a,0} coefficients match the dual-ladder closed form") {
    // From D f_a - x f_a = delta_a - rho_N(a) 1, the coefficients obey
    // c_k = (rho_N(a) one_{k+1} - phi_{k+1}(a)) / sqrt(2(k+1)).
    const int K = 200;
    for (double a : {-2.0, 0.0, 1.5}) {
        const SpectralRep f = f_an_coeffs(a, 0, K);
        const SpectralRep one = one_coeffs(K + 1);
        const auto phi = hermite_phi_all(K + 1, a);
        const double rho_a = kInvSqrt2Pi * std::exp(-0.5 * a * a);
        double worst = 0.0;
        for (int k = 0; k <= K; ++k) {
            const double closed = (rho_a * one.coeffs[k + 1] - phi[k + 1]) / std::sqrt(2.0 * (k + 1));
            worst = std::max(worst, std::abs(f.coeffs[k] - closed));
        }
        CHECK(worst < 1e-10);
        // and the S_0 distance to an independent projection is small
        ProjectOptions opts;
        opts.split_points = {a};
        opts.rel_tol = 1e-10;
        const auto proj = project_function([a](double x) { return f_a_eval(a, x); }, K, opts);
        CHECK(s_alpha_norm(rep_axpy(1.0, f, -1.0, proj.rep), 0.0) < 1e-6);
    }
}

TEST_CASE("f_{a,1} assembles delta and f_a parts") {
    const int K = 60;
    const double a = 0.8;
    const SpectralRep f1 = f_an_coeffs(a, 1, K);
    const SpectralRep d = delta_coeffs(a, K);
    const SpectralRep f0 = f_an_coeffs(a, 0, K);
    // f_{a,1} = -(delta_a + H_1(a) f_a)
    for (int k = 0; k <= K; ++k)
        CHECK(f1.coeffs[k] == doctest::Approx(-(d.coeffs[k] + a * f0.coeffs[k])).epsilon(1e-9));
}

TEST_CASE("weak residual of the distributional equation") {
    CHECK(stein_residual_relnorm(0.0, 0, 400) < 1e-5);
    CHECK(stein_residual_relnorm(1.5, 2, 400) < 1e-4);
    CHECK(stein_residual_relnorm(-2.0, 1, 400) < 1e-4);
    CHECK_THROWS_AS(stein_residual(0.0, 2, 9), std::invalid_argument);
}

TEST_CASE("anti-test: the zero rep does not solve the equation") {
    // residual of T = 0 equals the right-hand side itself
    const int K = 200, n = 1;
    const SpectralRep rhs = ladder_derivative_k(delta_coeffs(1.0, K - 1 + n), n);
    const SpectralRep one = one_coeffs(K - 1);
    const double rho_n_a = gaussian_density_derivative(n, 1.0);
    std::vector<double> res(K, 0.0);
    for (int m = 0; m < K; ++m) res[m] = -(-1.0) * rhs.coeffs[m] + rho_n_a * one.coeffs[m];
    const double rel = s_alpha_norm(SpectralRep{res}, -2.0) / s_alpha_norm(rhs, -2.0);
    CHECK(rel > 0.5);  // nowhere near a solution
}

TEST_CASE("pairing identity lhs vs rhs") {
    {
        const auto [lhs, rhs] = pairing_identity_check(0.0, 0, 0, 60);
        CHECK(rhs == 0.0);  // odd derivative of rho_N at 0
        CHECK(std::abs(lhs) < 1e-12);
    }
    {
        const auto [lhs, rhs] = pairing_identity_check(1.0, 0, 0, 60);
        CHECK(rhs == doctest::Approx(-0.24197072451914337).epsilon(1e-14));
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-10));
    }
    {
        const auto [lhs, rhs] = pairing_identity_check(0.5, 2, 1, 60);
        // rho_N^{(4)}(x) = (x^4 - 6x^2 + 3) rho_N(x), halved
        const double x = 0.5;
        const double expect =
            (std::pow(x, 4) - 6.0 * x * x + 3.0) * kInvSqrt2Pi * std::exp(-0.5 * x * x) / 2.0;
        CHECK(rhs == doctest::Approx(expect).epsilon(1e-14));
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-9));
    }
}

TEST_CASE("uniform S_{-n-k} control of ladder derivatives of f_{a,n}") {
    // max over the a-grid is finite and stabilizes from K=300 to K=400
    for (int n = 0; n <= 3; ++n) {
        for (int k = 0; k <= 1; ++k) {
            double sup300 = 0.0, sup400 = 0.0;
            for (double a = -4.0; a <= 4.001; a += 0.5) {
                const double v300 =
                    s_alpha_norm(ladder_derivative_k(f_an_coeffs(a, n, 300), k), -n - k);
                const double v400 =
                    s_alpha_norm(ladder_derivative_k(f_an_coeffs(a, n, 400), k), -n - k);
                sup300 = std::max(sup300, v300);
                sup400 = std::max(sup400, v400);
            }
            CHECK(std::isfinite(sup400));
            CHECK(std::abs(sup400 - sup300) / sup400 < 0.01);
        }
    }
}

TEST_CASE("truncation preconditions") {
    CHECK_THROWS_AS(f_an_coeffs(0.0, 3, 10), std::invalid_argument);
    CHECK_THROWS_AS(pairing_identity_check(0.0, 2, 3, 10), std::invalid_argument);
}

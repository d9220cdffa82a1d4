#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "chaoslab/hermite.hpp"
#include "chaoslab/quadrature.hpp"
#include "chaoslab/rng.hpp"
#include "chaoslab/spectral.hpp"

using namespace chaoslab;

namespace {
SpectralRep unit_rep(int index, int K) {
    std::vector<double> c(K + 1, 0.0);
    c[index] = 1.0;
    return SpectralRep(std::move(c));
}
}  // namespace

TEST_CASE("s_alpha_norm definition") {
    CHECK(s_alpha_norm(SpectralRep{std::vector<double>(20, 0.0)}, 1.3) == 0.0);
    CHECK(s_alpha_norm(unit_rep(0, 10), 0.0) == doctest::Approx(1.0));
    // c = (0,1,0,...), alpha = 2: 2^{2/2} (2^2)^{1/2} = 4 by hand-sum
    CHECK(s_alpha_norm(unit_rep(1, 10), 2.0) == doctest::Approx(4.0));
}

TEST_CASE("ladder actions on phi_0") {
    // phi_0' = -sqrt(1/2) phi_1 and x phi_0 = sqrt(1/2) phi_1
    const SpectralRep d = ladder_derivative(unit_rep(0, 6));
    const SpectralRep mx = ladder_mult_x(unit_rep(0, 6));
    for (int n = 0; n <= 5; ++n) {
        CHECK(d.coeffs[n] == doctest::Approx(n == 1 ? -std::sqrt(0.5) : 0.0));
        CHECK(mx.coeffs[n] == doctest::Approx(n == 1 ? std::sqrt(0.5) : 0.0));
    }
    CHECK(d.truncation() == 5);
    CHECK_THROWS_AS(ladder_derivative(unit_rep(0, 0)), std::invalid_argument);
    CHECK_THROWS_AS(ladder_mult_x(unit_rep(0, 0)), std::invalid_argument);
}

TEST_CASE("parity of ladder images") {
    // delta_0' is odd: even coefficients of the derivative vanish
    const SpectralRep dd = ladder_derivative(delta_coeffs(0.0, 41));
    for (int n = 0; n <= 40; n += 2) CHECK(dd.coeffs[n] == 0.0);
    // x * 1 is odd: only odd-index support
    const SpectralRep x1 = ladder_mult_x(one_coeffs(41));
    for (int n = 0; n <= 40; n += 2) CHECK(x1.coeffs[n] == 0.0);
}

TEST_CASE("delta and one coefficients") {
    const SpectralRep d0 = delta_coeffs(0.0, 41);
    for (int n = 1; n <= 41; n += 2) CHECK(d0.coeffs[n] == 0.0);  // parity
    const SpectralRep one = one_coeffs(40);
    for (int n = 1; n <= 39; n += 2) CHECK(one.coeffs[n] == 0.0);
    // Fourier cross-check: c_n = sqrt(2 pi) phi_n(0) (-1)^{n/2} for even n
    for (int n = 0; n <= 40; n += 2) {
        const double expect = std::sqrt(kTwoPi) * hermite_phi(n, 0.0) * ((n / 2) % 2 ? -1.0 : 1.0);
        CHECK(one.coeffs[n] == doctest::Approx(expect).epsilon(1e-12));
    }
    // pairing of one with the rho_N projection is the total mass
    CHECK(pair_reps(one_coeffs(400), rho_normal_coeffs(400)) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("pairing") {
    CHECK(pair_reps(unit_rep(3, 10), SpectralRep{std::vector<double>(11, 0.0)}) == 0.0);
    CHECK(pair_reps(unit_rep(4, 10), unit_rep(4, 20)) == 1.0);
    CHECK(pair_reps(unit_rep(4, 10), unit_rep(5, 20)) == 0.0);
    // delta paired with a smooth density evaluates the density
    const double rho13 = kInvSqrt2Pi * std::exp(-0.5 * 1.3 * 1.3);
    CHECK(pair_reps(delta_coeffs(1.3, 400), rho_normal_coeffs(400)) ==
          doctest::Approx(rho13).epsilon(1e-6));
}

TEST_CASE("delta pairing with a generic smooth test rep") {
    // f(x) = e^{-x^2} cos x projected, then <delta_a, f> = f(a)
    auto f = [](double x) { return std::exp(-x * x) * std::cos(x); };
    const auto pr = project_function(f, 300, ProjectOptions{});
    for (double a : {-1.0, 0.3, 2.0})
        CHECK(pair_reps(delta_coeffs(a, 300), pr.rep) == doctest::Approx(f(a)).epsilon(1e-8));
}

TEST_CASE("projection basics") {
    // phi_3 projects to the unit vector at index 3
    const auto pr = project_function([](double x) { return hermite_phi(3, x); }, 24, ProjectOptions{});
    for (int n = 0; n <= 24; ++n)
        CHECK(pr.rep.coeffs[n] == doctest::Approx(n == 3 ? 1.0 : 0.0).epsilon(1e-11));
    CHECK(pr.tail_mass < 1e-10);

    // rho_N projects onto phi_0 alone, coefficients (2pi)^{-1/2} gip(n, 1/2)
    const auto pn = project_function(
        [](double x) { return kInvSqrt2Pi * std::exp(-0.5 * x * x); }, 30, ProjectOptions{});
    for (int n = 0; n <= 30; ++n)
        CHECK(pn.rep.coeffs[n] ==
              doctest::Approx(kInvSqrt2Pi * gauss_integral_phi(n, 0.5)).epsilon(1e-11));

    // x phi_0 projected equals the ladder route
    const auto px = project_function([](double x) { return x * hermite_phi(0, x); }, 30,
                                     ProjectOptions{});
    const SpectralRep lx = ladder_mult_x(unit_rep(0, 31));
    for (int n = 0; n <= 30; ++n)
        CHECK(px.rep.coeffs[n] == doctest::Approx(lx.coeffs[n]).epsilon(1e-11));
}

TEST_CASE("derivative ladder equals projection of the derivative") {
    const auto proj = project_function(
        [](double x) { return -x * kPiQuarterInv * std::exp(-0.5 * x * x); }, 30, ProjectOptions{});
    const SpectralRep d = ladder_derivative(unit_rep(0, 31));
    for (int n = 0; n <= 30; ++n)
        CHECK(d.coeffs[n] == doctest::Approx(proj.rep.coeffs[n]).epsilon(1e-11));
}

TEST_CASE("duality of ladders (integration by parts)") {
    Xoshiro256pp rng(2024, 7);
    std::vector<double> tc(200), sc(200);
    for (int i = 0; i < 200; ++i) {
        tc[i] = rng.normal() / std::pow(i + 1.0, 1.5);
        sc[i] = rng.normal() / std::pow(i + 1.0, 3.0);  // smooth test side
    }
    const SpectralRep T{tc}, S{sc};
    const double lhs = pair_reps(ladder_derivative(T), S);
    const double rhs = -pair_reps(T, ladder_derivative(S));
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-8));
}

TEST_CASE("S_0 equals the quadrature L2 norm of the reconstruction") {
    Xoshiro256pp rng(5, 1);
    std::vector<double> c(61, 0.0);
    for (int i = 0; i <= 60; ++i) c[i] = rng.normal() * std::exp(-0.25 * i);
    const SpectralRep rep{c};
    const double l2 = std::sqrt(integrate_adaptive(
        [&](double x) {
            const double v = evaluate_rep(rep, x);
            return v * v;
        },
        -14.0, 14.0, 1e-12, 1e-12));
    CHECK(s_alpha_norm(rep, 0.0) == doctest::Approx(l2).epsilon(1e-8));
}

TEST_CASE("norm contraction property of both ladders") {
    Xoshiro256pp rng(99, 3);
    for (int rep_i = 0; rep_i < 50; ++rep_i) {
        std::vector<double> c(151);
        for (auto& v : c) v = rng.normal();
        const SpectralRep T{c};
        for (double alpha : {-1.5, 0.0, 2.0}) {
            const double bound = std::sqrt(std::pow(2.0, std::abs(alpha) - 1.0) + 0.5) *
                                 s_alpha_norm(T, alpha);
            CHECK(s_alpha_norm(ladder_derivative(T), alpha - 1.0) <= bound * (1.0 + 1e-12));
            CHECK(s_alpha_norm(ladder_mult_x(T), alpha - 1.0) <= bound * (1.0 + 1e-12));
        }
    }
}

TEST_CASE("csv round trip") {
    const SpectralRep r{std::vector<double>{1.5, -2.25, 0.0, 1e-17}};
    const SpectralRep back = rep_from_csv(rep_to_csv(r));
    REQUIRE(back.truncation() == r.truncation());
    for (int i = 0; i <= 3; ++i) CHECK(back.coeffs[i] == r.coeffs[i]);
    CHECK_THROWS_AS(rep_from_csv("2,1.0"), std::invalid_argument);
}

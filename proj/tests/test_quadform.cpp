#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "chaoslab/curve.hpp"
#include "chaoslab/quadform.hpp"
#include "chaoslab/rng.hpp"

using namespace chaoslab;

TEST_CASE("spec construction invariants") {
    const CovarianceModel m7 = make_fgn_model(0.7);
    const QuadFormSpec spec = make_quadform_spec(m7, 128, 1.0);
    double tr = 0.0, tr2 = 0.0;
    for (double l : spec.eigs) {
        CHECK(l >= -1e-10);
        tr += l;
        tr2 += l * l;
    }
    CHECK(tr == doctest::Approx(128.0).epsilon(1e-12));
    CHECK(spec.sigma_n2 == doctest::Approx(2.0 * tr2 / 128.0).epsilon(1e-14));
    CHECK_THROWS_AS(make_quadform_spec(m7, 0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(make_quadform_spec(m7, 16, 0.0), std::invalid_argument);
}

TEST_CASE("cumulants of the standardized chi-square") {
    // H = 1/2, n = 2: F = (Z1^2 + Z2^2 - 2)/2, a standardized chi^2_2
    const CovarianceModel half = make_fgn_model(0.5);
    const QuadFormSpec spec = make_quadform_spec(half, 2, 1.0);
    const auto k = exact_cumulants_m2(spec, 4);
    CHECK(k[0] == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(k[1] == doctest::Approx(2.0).epsilon(1e-14));  // sqrt(8/2)
    CHECK(k[2] == doctest::Approx(6.0).epsilon(1e-14));  // 12/2

    // Monte Carlo oracle on (Z1^2 + Z2^2 - 2)/2
    Xoshiro256pp rng(555, 0);
    const int reps = 2000000;
    double s3 = 0.0, s4 = 0.0;
    for (int i = 0; i < reps; ++i) {
        const double z1 = rng.normal(), z2 = rng.normal();
        const double f = 0.5 * (z1 * z1 + z2 * z2 - 2.0);
        s3 += f * f * f;
        s4 += f * f * f * f;
    }
    CHECK(s3 / reps == doctest::Approx(2.0).epsilon(0.02));
    CHECK(s4 / reps - 3.0 == doctest::Approx(6.0).epsilon(0.05));
}

TEST_CASE("kappa3 closed form at H = 1/2") {
    const CovarianceModel half = make_fgn_model(0.5);
    for (std::int64_t n : {4LL, 64LL, 1024LL}) {
        const auto k = exact_cumulants_m2(make_quadform_spec(half, n, 1.0), 4);
        CHECK(k[1] == doctest::Approx(std::sqrt(8.0 / n)).epsilon(1e-13));
        CHECK(k[2] == doctest::Approx(12.0 / n).epsilon(1e-13));
    }
    CHECK_THROWS_AS(exact_cumulants_m2(make_quadform_spec(half, 8, 1.0), 9), std::invalid_argument);
}

TEST_CASE("trace powers: eigenvalue route vs toeplitz route") {
    for (double H : {0.3, 0.5, 0.7}) {
        const CovarianceModel m = make_fgn_model(H);
        for (std::int64_t n : {17LL, 64LL, 256LL}) {
            const QuadFormSpec spec = make_quadform_spec(m, n, 1.0);
            std::vector<double> tp(4, 0.0);
            for (double l : spec.eigs) {
                double lp = l;
                for (int p = 0; p < 4; ++p) {
                    tp[p] += lp;
                    lp *= l;
                }
            }
            const auto tt = toeplitz_trace_powers(m, n, 4);
            for (int p = 0; p < 4; ++p)
                CHECK(tt[p] == doctest::Approx(tp[p]).epsilon(1e-11));
        }
    }
}

TEST_CASE("cumulants: nu sign and scale invariance of the normalized statistic") {
    const CovarianceModel m = make_fgn_model(0.6);
    const auto kp = exact_cumulants_m2_toeplitz(m, 64, 2.5, 4);
    const auto kn = exact_cumulants_m2_toeplitz(m, 64, -2.5, 4);
    const auto k1 = exact_cumulants_m2_toeplitz(m, 64, 1.0, 4);
    CHECK(kp[1] == doctest::Approx(k1[1]).epsilon(1e-13));
    CHECK(kn[1] == doctest::Approx(-k1[1]).epsilon(1e-13));
    CHECK(kn[2] == doctest::Approx(k1[2]).epsilon(1e-13));
}

TEST_CASE("exact density: chi^2_1 closed form at n = 1") {
    const CovarianceModel half = make_fgn_model(0.5);
    const QuadFormSpec spec = make_quadform_spec(half, 1, 1.0);
    const Grid grid;
    const DensityCurve c = exact_density_m2(spec, grid, 0);
    const double edge = -1.0 / std::sqrt(2.0);
    double worst = 0.0;
    for (int i = 0; i < c.npoints(); ++i) {
        const double x = c.x(i);
        if (x < edge + 0.1) continue;
        const double t = 1.0 + std::sqrt(2.0) * x;
        const double truth = std::sqrt(2.0 / (2.0 * M_PI * t)) * std::exp(-0.5 * t);
        worst = std::max(worst, std::abs(c.values[i] - truth));
    }
    CHECK(worst < 1e-6);
}

TEST_CASE("exact density: moments, positivity, support edge") {
    const CovarianceModel half = make_fgn_model(0.5);
    const Grid grid;
    for (std::int64_t n : {1024LL, 2048LL}) {
        const QuadFormSpec spec = make_quadform_spec(half, n, 1.0);
        const DensityCurve c = exact_density_m2(spec, grid, 0);
        CHECK(curve_moment_simpson(c, 0) == doctest::Approx(1.0).epsilon(1e-8));
        CHECK(std::abs(curve_moment_simpson(c, 1)) < 1e-8);
        CHECK(curve_moment_simpson(c, 2) == doctest::Approx(1.0).epsilon(1e-8));
        for (double v : c.values) CHECK(v >= -1e-10);
        // zero below the support edge -nu n/(sqrt(n) sigma_n) = -sqrt(n/2)
        const double edge = -std::sqrt(n / 2.0);
        for (int i = 0; i < c.npoints(); ++i)
            if (c.x(i) < std::max(edge, -8.0) - 1e-6) CHECK(std::abs(c.values[i]) < 1e-12);
    }
}

TEST_CASE("cumulants recovered from the exact density") {
    // the H = 0.7 upper tail at small n carries x^4 mass beyond 8, so the
    // moment extraction runs on the wide [-32, 32] grid
    const Grid wide{-32.0, 32.0, (1 << 15) + 1};
    const CovarianceModel m = make_fgn_model(0.7);
    for (std::int64_t n : {64LL, 256LL}) {
        const QuadFormSpec spec = make_quadform_spec(m, n, 1.0);
        const DensityCurve c = exact_density_m2(spec, wide, 0);
        const auto k = exact_cumulants_m2(spec, 4);
        const double m1 = curve_moment_simpson(c, 1);
        const double m2 = curve_moment_simpson(c, 2);
        const double m3 = curve_moment_simpson(c, 3);
        const double m4 = curve_moment_simpson(c, 4);
        CHECK(std::abs(m1) < 1e-6);
        CHECK(m2 == doctest::Approx(1.0).epsilon(1e-6));
        CHECK(m3 - 3.0 * m1 * m2 == doctest::Approx(k[1]).epsilon(1e-6));
        CHECK(m4 - 3.0 * m2 * m2 == doctest::Approx(k[2]).epsilon(1e-6));
    }
}

TEST_CASE("derivative curves and the edgeworth smoke window") {
    const CovarianceModel half = make_fgn_model(0.5);
    const QuadFormSpec spec = make_quadform_spec(half, 4096, 1.0);
    const Grid grid;
    const DensityCurve c0 = exact_density_m2(spec, grid, 0);
    const DensityCurve c1 = exact_density_m2(spec, grid, 1);
    double worst = 0.0;
    for (int i = 1; i + 1 < c0.npoints(); ++i) {
        const double fd = (c0.values[i + 1] - c0.values[i - 1]) / (2.0 * c0.step);
        worst = std::max(worst, std::abs(fd - c1.values[i]));
    }
    CHECK(worst < 10.0 * c0.step * c0.step);  // central differences are O(step^2)

    const auto k = exact_cumulants_m2(spec, 4);
    const DensityCurve rho_n = gaussian_reference(grid, 0);
    const double sup = curve_distance(c0, rho_n, CurveNorm::sup);
    const double predicted = std::abs(k[1]) / 6.0 * 0.5503186332023813;  // sup |rho_N^{(3)}|
    CHECK(sup / predicted > 0.2);
    CHECK(sup / predicted < 5.0);

    CHECK_THROWS_AS(exact_density_m2(spec, grid, 5), std::invalid_argument);
    CHECK_THROWS_AS(exact_density_m2(spec, Grid{-8.0, 8.0, 1025}, 0), std::invalid_argument);
}

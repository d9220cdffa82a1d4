#include "chaoslab/kstat.hpp"

#include <cmath>
#include <stdexcept>

namespace chaoslab {

namespace {

struct KOnly {
    long double k2, k3, k4;
};

// k-statistics from centered power sums s_r = sum (x - mean)^r of size n.
KOnly kstats_from_sums(long double s2, long double s3, long double s4, long double n) {
    KOnly k;
    k.k2 = s2 / (n - 1);
    k.k3 = n * s3 / ((n - 1) * (n - 2));
    k.k4 = ((n * n + n) * s4 - 3 * (n - 1) * s2 * s2) / ((n - 1) * (n - 2) * (n - 3));
    return k;
}

}  // namespace

KStatResult k_statistics(const std::vector<double>& x) {
    const std::size_t N = x.size();
    if (N < 8) throw std::invalid_argument("k_statistics: need at least 8 samples");
    const long double n = static_cast<long double>(N);

    long double mean = 0.0L;
    for (double v : x) mean += v;
    mean /= n;

    // centered power sums T_r = sum y^r, y = x - mean (T1 ~ 0 kept exactly)
    long double T1 = 0.0L, T2 = 0.0L, T3 = 0.0L, T4 = 0.0L;
    for (double v : x) {
        const long double y = v - mean;
        const long double y2 = y * y;
        T1 += y;
        T2 += y2;
        T3 += y2 * y;
        T4 += y2 * y2;
    }

    const KOnly full = kstats_from_sums(T2, T3, T4, n);

    // Leave-one-out: remaining values centered at mean - y_i/(n-1) are
    // y_j + d with d = y_i/(n-1), so the downdated sums follow from the
    // binomial expansion of sum (y + d)^r minus the removed sample.
    const long double m = n - 1;
    long double dev3 = 0.0L, dev4 = 0.0L, devsq3 = 0.0L, devsq4 = 0.0L;
    for (double v : x) {
        const long double y = v - mean;
        const long double d = y / m;
        const long double d2 = d * d;
        const long double yd = y + d;
        const long double yd2 = yd * yd;
        const long double s2 = T2 + 2 * d * T1 + n * d2 - yd2;
        const long double s3 = T3 + 3 * d * T2 + 3 * d2 * T1 + n * d2 * d - yd2 * yd;
        const long double s4 =
            T4 + 4 * d * T3 + 6 * d2 * T2 + 4 * d2 * d * T1 + n * d2 * d2 - yd2 * yd2;
        const KOnly ki = kstats_from_sums(s2, s3, s4, m);
        // accumulate deviations from the full-sample estimate so the
        // variance sum does not cancel catastrophically
        const long double e3 = ki.k3 - full.k3;
        const long double e4 = ki.k4 - full.k4;
        dev3 += e3;
        dev4 += e4;
        devsq3 += e3 * e3;
        devsq4 += e4 * e4;
    }
    const long double var3 = (devsq3 - dev3 * dev3 / n) * m / n;
    const long double var4 = (devsq4 - dev4 * dev4 / n) * m / n;

    KStatResult r;
    r.mean = static_cast<double>(mean);
    r.k2 = static_cast<double>(full.k2);
    r.k3 = static_cast<double>(full.k3);
    r.k4 = static_cast<double>(full.k4);
    r.se3 = static_cast<double>(std::sqrt(std::max(0.0L, var3)));
    r.se4 = static_cast<double>(std::sqrt(std::max(0.0L, var4)));
    return r;
}

}  // namespace chaoslab

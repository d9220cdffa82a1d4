#pragma once

#include <vector>

namespace chaoslab {

// Unbiased sample cumulants (k-statistics) k2..k4 with delete-1 jackknife
// standard errors for k3 and k4. The jackknife replicates are computed
// exactly in O(N) by downdating centered power sums.
struct KStatResult {
    double mean = 0.0;
    double k2 = 0.0;
    double k3 = 0.0;
    double k4 = 0.0;
    double se3 = 0.0;
    double se4 = 0.0;
};

KStatResult k_statistics(const std::vector<double>& x);

}  // namespace chaoslab

#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace chaoslab {

struct RateFit {
    double slope = 0.0;
    double intercept = 0.0;
    double stderr_slope = 0.0;
    std::vector<std::int64_t> n_values;
    int log_power_removed = 0;
};

// Ordinary least squares of log y - log_power * log log n on log n.
// Requires >= 4 points with strictly increasing n and y > 0.
RateFit fit_loglog(const std::vector<std::pair<std::int64_t, double>>& points, int log_power = 0);

}  // namespace chaoslab

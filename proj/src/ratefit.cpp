#include "chaoslab/ratefit.hpp"

#include <cmath>
#include <stdexcept>

namespace chaoslab {

RateFit fit_loglog(const std::vector<std::pair<std::int64_t, double>>& points, int log_power) {
    const std::size_t k = points.size();
    if (k < 4) throw std::invalid_argument("fit_loglog: need at least 4 points");
    std::vector<double> xs(k), zs(k);
    for (std::size_t i = 0; i < k; ++i) {
        const auto [n, y] = points[i];
        if (n < 2) throw std::invalid_argument("fit_loglog: n must be >= 2");
        if (i > 0 && n <= points[i - 1].first)
            throw std::invalid_argument("fit_loglog: n values must be strictly increasing");
        if (!(y > 0.0)) throw std::invalid_argument("fit_loglog: y must be positive");
        xs[i] = std::log(static_cast<double>(n));
        zs[i] = std::log(y) - log_power * std::log(xs[i]);
    }
    double sx = 0.0, sz = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
        sx += xs[i];
        sz += zs[i];
    }
    const double mx = sx / k, mz = sz / k;
    double sxx = 0.0, sxz = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
        sxx += (xs[i] - mx) * (xs[i] - mx);
        sxz += (xs[i] - mx) * (zs[i] - mz);
    }
    RateFit fit;
    fit.slope = sxz / sxx;
    fit.intercept = mz - fit.slope * mx;
    double rss = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
        const double r = zs[i] - (fit.intercept + fit.slope * xs[i]);
        rss += r * r;
    }
    fit.stderr_slope = std::sqrt(rss / (k - 2) / sxx);
    fit.log_power_removed = log_power;
    fit.n_values.reserve(k);
    for (const auto& p : points) fit.n_values.push_back(p.first);
    return fit;
}

}  // namespace chaoslab

#include "htp/correlation.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "htp/errors.hpp"

namespace htp {

double pearson(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size())
        throw Error(ErrorCode::LengthMismatch,
                    std::to_string(x.size()) + " vs " + std::to_string(y.size()));
    if (x.size() < 2)
        throw Error(ErrorCode::LengthMismatch, "need at least 2 observations");

    double n = static_cast<double>(x.size());
    double mean_x = std::accumulate(x.begin(), x.end(), 0.0) / n;
    double mean_y = std::accumulate(y.begin(), y.end(), 0.0) / n;
    double cov = 0.0, var_x = 0.0, var_y = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        double dx = x[i] - mean_x;
        double dy = y[i] - mean_y;
        cov += dx * dy;
        var_x += dx * dx;
        var_y += dy * dy;
    }
    if (var_x == 0.0 || var_y == 0.0)
        throw Error(ErrorCode::ZeroVariance, "correlation undefined for a constant input");
    return cov / std::sqrt(var_x * var_y);
}

std::vector<double> fractional_ranks(std::span<const double> values) {
    std::vector<std::size_t> order(values.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });

    std::vector<double> ranks(values.size());
    std::size_t i = 0;
    while (i < order.size()) {
        std::size_t j = i;
        while (j + 1 < order.size() && values[order[j + 1]] == values[order[i]]) ++j;
        // tied block [i, j] shares the average of its rank positions
        double avg = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
        for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = avg;
        i = j + 1;
    }
    return ranks;
}

double spearman(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size())
        throw Error(ErrorCode::LengthMismatch,
                    std::to_string(x.size()) + " vs " + std::to_string(y.size()));
    std::vector<double> rx = fractional_ranks(x);
    std::vector<double> ry = fractional_ranks(y);
    return pearson(rx, ry);
}

}  // namespace htp

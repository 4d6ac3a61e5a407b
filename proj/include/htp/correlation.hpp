#pragma once

#include <span>
#include <vector>

namespace htp {

/// Product-moment correlation. Throws LengthMismatch and ZeroVariance.
double pearson(std::span<const double> x, std::span<const double> y);

/// Fractional (average-tie) ranks, 1-based.
std::vector<double> fractional_ranks(std::span<const double> values);

/// Pearson correlation of the fractional ranks.
double spearman(std::span<const double> x, std::span<const double> y);

}  // namespace htp

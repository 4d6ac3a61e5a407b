#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "htp/correlation.hpp"
#include "htp/errors.hpp"

namespace {

// Independent oracle: O(n^2) counting ranks and the raw-moment Pearson
// formula, deliberately different routes than the library's.
std::vector<double> oracle_ranks(const std::vector<double>& v) {
    std::vector<double> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        std::size_t less = 0, equal = 0;
        for (std::size_t j = 0; j < v.size(); ++j) {
            if (v[j] < v[i]) ++less;
            if (v[j] == v[i]) ++equal;
        }
        out[i] = static_cast<double>(less) + 1.0 + (static_cast<double>(equal) - 1.0) / 2.0;
    }
    return out;
}

double oracle_pearson(const std::vector<double>& x, const std::vector<double>& y) {
    double n = static_cast<double>(x.size());
    double sx = 0, sy = 0, sxy = 0, sxx = 0, syy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
        sxy += x[i] * y[i];
        sxx += x[i] * x[i];
        syy += y[i] * y[i];
    }
    return (n * sxy - sx * sy) / std::sqrt((n * sxx - sx * sx) * (n * syy - sy * sy));
}

double oracle_spearman(const std::vector<double>& x, const std::vector<double>& y) {
    return oracle_pearson(oracle_ranks(x), oracle_ranks(y));
}

}  // namespace

TEST_CASE("pearson basics") {
    std::vector<double> x = {1, 2, 3};
    CHECK(htp::pearson(x, x) == doctest::Approx(1.0).epsilon(1e-15));
    std::vector<double> neg = {-1, -2, -3};
    CHECK(htp::pearson(x, neg) == doctest::Approx(-1.0).epsilon(1e-15));

    // frozen against the raw-moment oracle: 15 / sqrt(6 * 38)
    std::vector<double> y = {2, 4, 7};
    CHECK(htp::pearson(x, y) == doctest::Approx(0.9933992677987828).epsilon(1e-14));
    // and 9 / sqrt(84)
    std::vector<double> y2 = {1, 2, 4};
    CHECK(htp::pearson(x, y2) == doctest::Approx(0.9819805060619659).epsilon(1e-14));
}

TEST_CASE("pearson error paths") {
    std::vector<double> x = {1, 2, 3};
    std::vector<double> shorter = {1, 2};
    std::vector<double> constant = {5, 5, 5};
    CHECK_THROWS_AS(htp::pearson(x, shorter), htp::Error);
    CHECK_THROWS_AS(htp::pearson(x, constant), htp::Error);
    try {
        htp::pearson(x, constant);
    } catch (const htp::Error& e) {
        CHECK(e.code() == htp::ErrorCode::ZeroVariance);
    }
    std::vector<double> one = {1.0};
    CHECK_THROWS_AS(htp::pearson(one, one), htp::Error);
}

TEST_CASE("spearman basics") {
    std::vector<double> x = {1, 2, 3};
    std::vector<double> y = {3, 1, 2};
    CHECK(htp::spearman(x, y) == doctest::Approx(-0.5).epsilon(1e-14));

    // monotone transforms leave ranks alone
    std::vector<double> exp_x = {std::exp(1.0), std::exp(2.0), std::exp(3.0)};
    CHECK(htp::spearman(x, exp_x) == doctest::Approx(1.0).epsilon(1e-14));

    // ties: ranks [1.5, 1.5, 3] vs [1, 2, 3] -> 1.5 / sqrt(3)
    std::vector<double> tied = {1, 1, 2};
    std::vector<double> plain = {1, 2, 3};
    CHECK(htp::spearman(tied, plain) == doctest::Approx(0.8660254037844386).epsilon(1e-14));
}

TEST_CASE("fractional ranks average tied positions") {
    std::vector<double> v = {10, 20, 20, 30};
    CHECK(htp::fractional_ranks(v) == std::vector<double>{1.0, 2.5, 2.5, 4.0});
    std::vector<double> same = {7, 7, 7};
    CHECK(htp::fractional_ranks(same) == std::vector<double>{2.0, 2.0, 2.0});
}

TEST_CASE("correlations are symmetric and transform-invariant") {
    std::mt19937_64 rng(31337);
    std::uniform_real_distribution<double> dist(-10.0, 10.0);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t n = 3 + rng() % 40;
        std::vector<double> x(n), y(n);
        for (std::size_t i = 0; i < n; ++i) {
            x[i] = dist(rng);
            y[i] = dist(rng);
        }
        CHECK(htp::pearson(x, y) == doctest::Approx(htp::pearson(y, x)).epsilon(1e-15));
        CHECK(htp::spearman(x, y) == doctest::Approx(htp::spearman(y, x)).epsilon(1e-15));

        // positive affine transform of an argument
        std::vector<double> ax(n);
        for (std::size_t i = 0; i < n; ++i) ax[i] = 3.5 * x[i] + 100.0;
        CHECK(htp::pearson(ax, y) == doctest::Approx(htp::pearson(x, y)).epsilon(1e-12));

        // strictly increasing transforms for spearman
        std::vector<double> ex(n), tx(n);
        for (std::size_t i = 0; i < n; ++i) {
            ex[i] = std::exp(x[i] / 10.0);
            tx[i] = 10.0 * x[i] + 100.0;
        }
        double base = htp::spearman(x, y);
        CHECK(htp::spearman(ex, y) == doctest::Approx(base).epsilon(1e-12));
        CHECK(htp::spearman(tx, y) == doctest::Approx(base).epsilon(1e-12));
    }
}

TEST_CASE("spearman and pearson agree with the brute-force oracle") {
    std::mt19937_64 rng(2025);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    for (int trial = 0; trial < 1000; ++trial) {
        std::size_t n = 3 + rng() % 30;
        std::vector<double> x(n), y(n);
        for (std::size_t i = 0; i < n; ++i) {
            x[i] = dist(rng);
            y[i] = dist(rng);
        }
        // inject ties in roughly half the trials
        if (trial % 2 == 0) {
            for (std::size_t i = 0; i < n; ++i) {
                x[i] = std::round(x[i] * 4.0) / 4.0;
                y[i] = std::round(y[i] * 4.0) / 4.0;
            }
            if (htp::fractional_ranks(x) == std::vector<double>(n, (n + 1) / 2.0)) continue;
            if (htp::fractional_ranks(y) == std::vector<double>(n, (n + 1) / 2.0)) continue;
        }
        CHECK(htp::pearson(x, y) == doctest::Approx(oracle_pearson(x, y)).epsilon(1e-12));
        CHECK(htp::spearman(x, y) == doctest::Approx(oracle_spearman(x, y)).epsilon(1e-12));
    }
}

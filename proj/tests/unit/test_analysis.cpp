#include "xyness/analysis.hpp"
#include "xyness/error.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <vector>

using namespace xyness;

TEST(Fit, PowerLawExact) {
    std::vector<double> x, y;
    for (int r = 1; r <= 100; ++r) {
        x.push_back(r);
        y.push_back(2.5 * std::pow(r, -4.09));
    }
    const FitResult f = fit_power(x, y, {8, 80});
    EXPECT_EQ(f.kind, FitKind::power);
    EXPECT_NEAR(f.exponent, 4.09, 1e-9);
    EXPECT_NEAR(f.amplitude, 2.5, 1e-9);
    EXPECT_NEAR(f.r_squared, 1.0, 1e-12);
    EXPECT_EQ(f.npoints, 73);
    EXPECT_DOUBLE_EQ(f.window.lo, 8.0);
    EXPECT_DOUBLE_EQ(f.window.hi, 80.0);
}

TEST(Fit, ExponentialExact) {
    std::vector<double> x, y;
    for (int r = 0; r < 60; ++r) {
        x.push_back(r);
        y.push_back(0.3 * std::exp(-r / 1.533));
    }
    const FitResult f = fit_exponential(x, y, {8, 40}, kDecayFloor);
    EXPECT_NEAR(f.decay_length(), 1.533, 1e-9);
    EXPECT_NEAR(f.amplitude, 0.3, 1e-9);
}

TEST(Fit, FloorDropsNoise) {
    std::vector<double> x, y;
    for (int r = 1; r <= 40; ++r) {
        x.push_back(r);
        y.push_back(std::exp(-double(r)));
    }
    y.back() = -1e-20; // below the floor: ignored even though negative
    const FitResult f = fit_exponential(x, y, {}, kDecayFloor);
    EXPECT_NEAR(f.exponent, 1.0, 1e-9);
    EXPECT_LT(f.npoints, 40);
}

TEST(Fit, LinearExact) {
    const std::vector<double> x = {40, 80, 120, 160, 200};
    std::vector<double> y;
    for (double v : x) y.push_back(0.2 + 0.018 * v);
    const FitResult f = fit_linear(x, y);
    EXPECT_NEAR(f.slope(), 0.018, 1e-12);
    EXPECT_NEAR(f.intercept(), 0.2, 1e-10);
    EXPECT_NEAR(f.jackknife_error, 0.0, 1e-12);
}

TEST(Fit, JackknifeReportsScatter) {
    const std::vector<double> x = {1, 2, 3, 4, 5, 6};
    const std::vector<double> y = {1.0, 2.1, 2.9, 4.2, 4.8, 6.1};
    EXPECT_GT(fit_linear(x, y).jackknife_error, 0.0);
}

TEST(Fit, Errors) {
    const std::vector<double> x = {1, 2, 3, 4};
    const std::vector<double> y = {1, 0.5, 0.25, 0.125};
    EXPECT_THROW(fit_power(x, y, {10, 20}), FitError);
    const std::vector<double> bad = {1, -0.5, 0.25, 0.125};
    EXPECT_THROW(fit_power(x, bad), FitError);
    const std::vector<double> short_y = {1, 2};
    EXPECT_THROW(fit_linear(x, short_y), FitError);
}

namespace {

// C(r) = n^{-nu} F(r/n) with F(u) = exp(-3u) u^{-1}
ScaledProfile synthetic(int n, double nu) {
    ScaledProfile p;
    p.n = n;
    for (int r = 1; r <= n / 2; ++r) {
        const double u = double(r) / n;
        p.r.push_back(r);
        p.c.push_back(std::pow(n, -nu) * std::exp(-3 * u) / u);
    }
    return p;
}

} // namespace

TEST(Collapse, RecoversExponent) {
    const std::vector<ScaledProfile> profiles = {synthetic(160, 4.09), synthetic(320, 4.09)};
    EXPECT_LT(collapse_mismatch(profiles, 4.09), 1e-6);
    std::vector<double> grid;
    for (int k = 0; k <= 200; ++k) grid.push_back(2.0 + 0.02 * k);
    const CollapseResult r = collapse_check(profiles, 2.0, grid);
    EXPECT_NEAR(r.best_nu, 4.1, 0.021);
    EXPECT_GT(r.mismatch, r.best_mismatch);
}

TEST(Collapse, NeedsTwoProfiles) {
    const std::vector<ScaledProfile> one = {synthetic(160, 4.0)};
    const std::vector<double> grid = {4.0};
    EXPECT_THROW(collapse_check(one, 4.0, grid), FitError);
}

// analysis.hpp: Least-squares fits for power laws, exponential decay, linear growth,
// and finite-size collapse of distance profiles

#pragma once

#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace xyness {

enum class FitKind { power, exponential, linear };

std::string to_string(FitKind kind);

struct FitWindow {
    double lo{-std::numeric_limits<double>::infinity()};
    double hi{std::numeric_limits<double>::infinity()};
};

// Parameter meaning by kind:
//   power:        y = amplitude * x^(-exponent)
//   exponential:  y = amplitude * exp(-exponent * x), decay_length() = 1/exponent
//   linear:       y = amplitude + exponent * x   (amplitude = intercept, exponent = slope)
struct FitResult {
    FitKind kind{FitKind::linear};
    double amplitude{0.0};
    double exponent{0.0};
    double r_squared{0.0};
    FitWindow window;
    int npoints{0};
    double jackknife_error{0.0}; // leave-one-out error of `exponent`

    double slope() const { return exponent; }
    double intercept() const { return amplitude; }
    double decay_length() const { return 1.0 / exponent; }
};

// Points with x outside the window are skipped, as are points with |y| < floor
// (y must be positive otherwise). Throws FitError("empty window") when fewer than
// three points remain and FitError("nonpositive data") for y <= 0 above the floor.
FitResult fit_power(std::span<const double> xs, std::span<const double> ys, FitWindow window = {},
                    double floor = 0.0);
FitResult fit_exponential(std::span<const double> xs, std::span<const double> ys, FitWindow window = {},
                          double floor = 0.0);
// Throws FitError("degenerate abscissa") when all x coincide.
FitResult fit_linear(std::span<const double> xs, std::span<const double> ys);

// Default floor for decay fits of 4-point correlators.
inline constexpr double kDecayFloor = 1e-14;

// One distance profile: chain length n and samples (r, |C(r)|).
struct ScaledProfile {
    int n{0};
    std::vector<double> r;
    std::vector<double> c;
};

struct CollapseResult {
    double mismatch{0.0}; // at the requested nu
    double best_nu{0.0};
    double best_mismatch{0.0};
};

// Mean squared log-deviation between rescaled curves (r/n, n^nu |C|), compared
// pairwise on their common support with log-log linear interpolation.
// Samples with |C| below kDecayFloor or r < rmin are ignored.
double collapse_mismatch(const std::vector<ScaledProfile>& profiles, double nu, double rmin = 1.0);

// Throws FitError("no common support") if the rescaled abscissae do not overlap.
CollapseResult collapse_check(const std::vector<ScaledProfile>& profiles, double nu,
                              std::span<const double> nu_grid, double rmin = 1.0);

} // namespace xyness

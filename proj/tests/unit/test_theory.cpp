#include "xyness/theory.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace xyness;

TEST(Theory, CriticalField) {
    EXPECT_DOUBLE_EQ(critical_field(0.5), 0.75);
    EXPECT_DOUBLE_EQ(critical_field(0.0), 1.0);
    EXPECT_DOUBLE_EQ(critical_field(1.0), 0.0);
    EXPECT_DOUBLE_EQ(critical_field(1.5), 0.0);
}

TEST(Theory, CorrelationLength) {
    const TheoryPoint a = theory_point(0.5, 0.76);
    EXPECT_EQ(a.regime, Regime::short_range);
    EXPECT_FALSE(a.xi_infinite);
    EXPECT_NEAR(a.xi, 1.0 / (4.0 * std::acosh(0.76 / 0.75)), 1e-14);
    EXPECT_NEAR(a.xi, 1.5326, 1e-3);
    EXPECT_NEAR(theory_point(0.5, 0.77).xi, 1.0849, 1e-3);
    // Near h_c the square-root approximation is close.
    EXPECT_NEAR(1.0 / a.xi, a.inv_xi_approx, 0.01 * a.inv_xi_approx);
}

TEST(Theory, OrderedPhase) {
    const TheoryPoint p = theory_point(0.5, 0.3);
    EXPECT_EQ(p.regime, Regime::lrmc);
    EXPECT_TRUE(p.xi_infinite);
    EXPECT_NEAR(p.phi_star, std::acos(0.4), 1e-14);
    EXPECT_NEAR(p.phi_star, 1.1593, 1e-4);
    const TheoryPoint q = theory_point(0.5, 0.749);
    EXPECT_NEAR(q.phi_star, q.phi_star_approx, 1e-3);
}

TEST(Theory, CriticalAndBoundaryLines) {
    EXPECT_EQ(theory_point(0.5, 0.75).regime, Regime::critical);
    EXPECT_EQ(theory_point(0.0, 0.5).regime, Regime::boundary_line);
    EXPECT_EQ(theory_point(0.5, 0.0).regime, Regime::boundary_line);
    EXPECT_TRUE(theory_point(1.2, 0.5).extrapolated);
    EXPECT_EQ(to_string(Regime::lrmc), "lrmc");
}

TEST(Theory, DispersionIsNonNegativeAndSymmetric) {
    for (double phi = -3.0; phi <= 3.0; phi += 0.25) {
        EXPECT_GE(dispersion(0.5, 0.3, phi), 0.0);
        EXPECT_NEAR(dispersion(0.5, 0.3, phi), dispersion(0.5, 0.3, -phi), 1e-15);
    }
}

TEST(Theory, PhiStarIsAnInteriorExtremumOfTheBand) {
    const TheoryPoint p = theory_point(0.5, 0.3);
    const double e = 1e-6;
    const double slope = (dispersion(0.5, 0.3, p.phi_star + e) - dispersion(0.5, 0.3, p.phi_star - e)) / (2 * e);
    EXPECT_NEAR(slope, 0.0, 1e-8);
    // Above h_c the band is monotone on (0, pi).
    for (double phi = 0.1; phi < 3.0; phi += 0.1)
        EXPECT_GT(dispersion(0.5, 0.9, phi + 0.05), dispersion(0.5, 0.9, phi));
}

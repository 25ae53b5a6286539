#include "xyness/theory.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace xyness {

double dispersion(double gamma, double h, double phi) {
    const double a = std::cos(phi) - h;
    const double b = gamma * std::sin(phi);
    return std::sqrt(a * a + b * b);
}

double critical_field(double gamma) { return std::max(0.0, 1.0 - gamma * gamma); }

std::string to_string(Regime r) {
    switch (r) {
    case Regime::lrmc: return "lrmc";
    case Regime::critical: return "critical";
    case Regime::short_range: return "short_range";
    case Regime::boundary_line: return "boundary_line";
    }
    return "unknown";
}

TheoryPoint theory_point(double gamma, double h) {
    constexpr double tol = 1e-12;
    TheoryPoint p;
    p.gamma = gamma;
    p.h = h;
    p.h_c = critical_field(gamma);
    p.extrapolated = gamma > 1.0;
    p.xi = std::numeric_limits<double>::infinity();

    if (std::abs(h - p.h_c) <= tol) {
        p.regime = Regime::critical;
    } else if (h < p.h_c) {
        p.regime = Regime::lrmc;
        p.phi_star = std::acos(h / p.h_c);
        p.phi_star_approx = std::sqrt(2.0 * (p.h_c - h) / p.h_c);
    } else {
        p.regime = Regime::short_range;
        if (p.h_c > 0.0) {
            p.xi = 1.0 / (4.0 * std::acosh(h / p.h_c));
            p.xi_infinite = false;
            p.inv_xi_approx = 4.0 * std::sqrt(2.0 * (h - p.h_c) / p.h_c);
        } else {
            // h_c = 0: acosh(h/h_c) diverges, correlations are ultra-local.
            p.xi = 0.0;
            p.xi_infinite = false;
            p.inv_xi_approx = std::numeric_limits<double>::infinity();
        }
    }
    if (p.regime == Regime::lrmc && (gamma == 0.0 || h == 0.0)) p.regime = Regime::boundary_line;
    return p;
}

} // namespace xyness

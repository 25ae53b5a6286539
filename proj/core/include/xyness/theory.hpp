// theory.hpp: Closed-form quasi-particle predictions for the open XY chain

#pragma once

#include <string>

namespace xyness {

// epsilon(phi) = sqrt((cos phi - h)^2 + gamma^2 sin^2 phi)
double dispersion(double gamma, double h, double phi);

// h_c = max(0, 1 - gamma^2)
double critical_field(double gamma);

enum class Regime {
    lrmc,          // h < h_c: long-range magnetic correlations
    critical,      // h = h_c
    short_range,   // h > h_c: exponential decay
    boundary_line, // gamma = 0 or h = 0, excluded from the LRMC phase
};

std::string to_string(Regime r);

struct TheoryPoint {
    double gamma{0.0};
    double h{0.0};
    double h_c{0.0};
    double phi_star{0.0};        // arccos(h/h_c) for h < h_c, else 0
    double phi_star_approx{0.0}; // sqrt(2 (h_c - h)/h_c) for h < h_c, else 0
    double xi{0.0};              // 1/(4 acosh(h/h_c)) for h > h_c
    bool xi_infinite{true};      // set when no finite decay length exists
    double inv_xi_approx{0.0};   // 4 sqrt(2 (h - h_c)/h_c) for h > h_c
    Regime regime{Regime::lrmc};
    bool extrapolated{false};    // gamma > 1, beyond the mapped phase diagram
};

TheoryPoint theory_point(double gamma, double h);

} // namespace xyness

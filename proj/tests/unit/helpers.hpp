#pragma once

#include "xyness/model.hpp"

#include <random>

namespace xyness::testing {

// Reference baths: 0.5 / 0.3 / 0.5 / 0.1
inline ChainSpec driven(int n, double gamma, double h) { return {n, gamma, h, 0.5, 0.3, 0.5, 0.1}; }

inline ChainSpec random_spec(int n, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    ChainSpec s;
    s.n = n;
    s.gamma = u(rng);
    s.h = 1.2 * u(rng);
    s.gl1 = u(rng);
    s.gl2 = u(rng);
    s.gr1 = u(rng);
    s.gr2 = u(rng);
    return s;
}

} // namespace xyness::testing

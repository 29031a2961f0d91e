#pragma once

// Shared random-ensemble helpers for the test suites.  Every suite seeds
// its own mt19937_64 so failures reproduce exactly.

#include <algorithm>
#include <cmath>
#include <random>

#include "poincare/polarization.hpp"
#include "poincare/sl2c.hpp"

namespace testsupport {

using poincare::CoherencyMatrix;
using poincare::FourVector;
using poincare::GeneratorKind;
using poincare::GroupElement;

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

// Up to max_steps generators with parameters in [-2, 2].  When
// boost_budget >= 0, the cumulative |rapidity| across the word is capped at
// that budget: products of large boosts scale matrix entries like e^{mu}
// and turn benign rounding into large relative errors downstream, so the
// ensembles for tight relative gates keep the boost content bounded while
// still exercising every generator kind.
inline GroupElement random_group_element(std::mt19937_64& rng, int max_steps = 8,
                                         double boost_budget = -1.0) {
    const int steps = std::uniform_int_distribution<int>(1, max_steps)(rng);
    double budget = boost_budget;
    GroupElement g = GroupElement::identity();
    for (int i = 0; i < steps; ++i) {
        const int kind = std::uniform_int_distribution<int>(0, 2)(rng);
        double param = uniform(rng, -2.0, 2.0);
        if (kind == 2 && budget >= 0.0) {
            param = std::clamp(param, -budget, budget);
            budget -= std::abs(param);
        }
        const GeneratorKind k = kind == 0   ? GeneratorKind::PhaseZ
                                : kind == 1 ? GeneratorKind::RotY
                                            : GeneratorKind::BoostZ;
        g = poincare::compose(poincare::make_generator(k, param), g);
    }
    return g;
}

inline FourVector random_four_vector(std::mt19937_64& rng, double lim = 10.0) {
    return {uniform(rng, -lim, lim), uniform(rng, -lim, lim), uniform(rng, -lim, lim),
            uniform(rng, -lim, lim)};
}

// Positive-semidefinite Hermitian state with a random orientation: start
// from the closed form and conjugate by a random unitary (phase-rotation
// word), which preserves eigenvalues and positivity.
inline CoherencyMatrix random_coherency(std::mt19937_64& rng) {
    const double a = uniform(rng, 0.5, 1.5);
    const double phi = uniform(rng, -3.141592653589793, 3.141592653589793);
    const double sigma = uniform(rng, 0.4, 4.0);
    CoherencyMatrix c = poincare::coherency_closed_form(a, phi, sigma);
    GroupElement u = poincare::make_generator(GeneratorKind::PhaseZ, uniform(rng, -3.0, 3.0));
    u = poincare::compose(poincare::make_generator(GeneratorKind::RotY, uniform(rng, -3.0, 3.0)), u);
    u = poincare::compose(poincare::make_generator(GeneratorKind::PhaseZ, uniform(rng, -3.0, 3.0)), u);
    return poincare::transform_coherency(u, c);
}

}  // namespace testsupport

// test_support.hpp — Shared random draws and tolerances for the test suites

#pragma once

#include <random>

#include "cptlab/model.hpp"
#include "cptlab/types.hpp"

namespace cptlab::testing {

// Deterministic engine; every suite seeds its own so test order never matters.
inline std::mt19937_64 make_rng(unsigned long long seed) { return std::mt19937_64{seed}; }

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
    return std::uniform_real_distribution<double>{lo, hi}(rng);
}

inline double log_uniform(std::mt19937_64& rng, double lo, double hi) {
    return std::exp(uniform(rng, std::log(lo), std::log(hi)));
}

// Parameter draw over the documented solver domain: gamma in [0.1, 50],
// Rabi frequencies in [0.1, 100], detunings in [-100, 100].
inline SystemParams random_params(std::mt19937_64& rng, bool with_phases = false,
                                  bool with_detunings = true) {
    SystemParams p;
    p.gamma = uniform(rng, 0.1, 50.0);
    p.omega1 = uniform(rng, 0.1, 100.0);
    p.omega2 = uniform(rng, 0.1, 100.0);
    if (with_phases) {
        p.phi1 = uniform(rng, -3.141592653589793, 3.141592653589793);
        p.phi2 = uniform(rng, -3.141592653589793, 3.141592653589793);
    }
    if (with_detunings) {
        p.delta1 = uniform(rng, -100.0, 100.0);
        p.delta2 = uniform(rng, -100.0, 100.0);
    }
    p.gamma_e = 1.0;
    return p;
}

// Random density matrix: normalized Gram matrix of a random complex 3x3 draw.
inline DensityMatrix random_density(std::mt19937_64& rng) {
    Eigen::Matrix3cd g;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) g(i, j) = Complex{uniform(rng, -1, 1), uniform(rng, -1, 1)};
    DensityMatrix rho = g * g.adjoint();
    rho /= rho.trace();
    return rho;
}

// Random Hermitian matrix with entries of order 1 (not necessarily positive).
inline DensityMatrix random_hermitian(std::mt19937_64& rng) {
    Eigen::Matrix3cd g;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) g(i, j) = Complex{uniform(rng, -1, 1), uniform(rng, -1, 1)};
    return 0.5 * (g + g.adjoint());
}

} // namespace cptlab::testing

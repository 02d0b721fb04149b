// steady_state.hpp — Direct steady-state solves for constant generators

#pragma once

#include "cptlab/generator.hpp"
#include "cptlab/model.hpp"
#include "cptlab/noise.hpp"
#include "cptlab/types.hpp"

namespace cptlab {

struct SteadySolution {
    DensityMatrix state;
    double residual = 0.0;     // max elementwise |A rho_vec|
    double nullity_gap = 0.0;  // smallest / second-smallest singular value
    double smallest_sv = 0.0;
    double second_sv = 0.0;
    double norm = 0.0;         // largest singular value of A
};

// Solves A rho_vec = 0 subject to tr(rho) = 1 by replacing the rho00 row with
// the trace functional; falls back to SVD null-space extraction if the modified
// system is singular. The result is Hermitian-symmetrized before validation.
// Throws NonUniqueSteadyStateError when the nullity is >= 2 (e.g. gamma = 0
// without drives or noise).
SteadySolution solve_steady(const Superoperator& gen);

// Steady rho00 of the generator built at delta1 = delta, delta2 = 0 under the
// given constant (Markovian or noiseless) bath strength. Requires gamma > 0;
// time-varying baths are handled by converge_to_steady instead.
double steady_excited_population(const SystemParams& params, const NoiseStrength& noise,
                                 double delta);

} // namespace cptlab

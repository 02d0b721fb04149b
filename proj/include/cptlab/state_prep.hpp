// state_prep.hpp — Dark-state preparation fidelity and drive-strength selection

#pragma once

#include <vector>

#include "cptlab/analysis.hpp"
#include "cptlab/model.hpp"
#include "cptlab/noise.hpp"

namespace cptlab {

// <d| rho_eq |d> for the resonant Markovian steady state, with |d> the dark
// state of (omega1, omega2, phi1 - phi2). Requires gamma > 0 and
// delta1 = delta2 = 0 (the fidelity is defined on resonance). The result must
// come out within [0, 1] to 1e-9 slack or an InternalConsistencyError is thrown.
double fidelity(const SystemParams& params, const NoiseStrength& noise);

// Same quantity parameterized by the Rabi ratio: the fidelity depends on omega1
// only through omega1/omega2, so f(omega1, omega2, tau2) = g(omega1/omega2,
// omega2, tau2) holds as an API identity.
double fidelity_ratio_form(double ratio, double omega2, const NoiseStrength& noise,
                           double gamma);

// Fidelity sweeps. Each asserts the structural shape that downstream users rely
// on and throws InternalConsistencyError when the solver fails to produce it:
//  - vs ratio: minimum within one grid step of the point nearest ratio 1
//    (checked when the grid spans [0.1, 10]);
//  - vs omega2: the last grid value sits within 1e-3 of the 90th-percentile
//    plateau value (skipped for single-point grids);
//  - vs tau2: strictly increasing.
SweepResult fidelity_vs_ratio(double omega2, const std::vector<double>& ratio_grid,
                              const NoiseStrength& noise, double gamma, int jobs = 1);
SweepResult fidelity_vs_omega2(double ratio, const std::vector<double>& omega2_grid,
                               const NoiseStrength& noise, double gamma, int jobs = 1);
SweepResult fidelity_vs_tau2(double ratio, double omega2,
                             const std::vector<double>& tau2_grid, double gamma,
                             int jobs = 1);

// Bounds of the internal log-spaced search grid used by minimal_adequate_omega2.
inline constexpr double kOmega2SearchLo = 0.1;
inline constexpr double kOmega2SearchHi = 200.0;

// Smallest omega2 whose fidelity is within threshold_defect of the plateau value
// f(kOmega2SearchHi), located by a log-spaced scan plus bisection refinement.
// Deterministic. Throws SaturationBelowThresholdError (carrying the plateau)
// when the plateau itself falls below quality_floor.
double minimal_adequate_omega2(double ratio, const NoiseStrength& noise, double gamma,
                               double threshold_defect, double quality_floor = 0.5);

} // namespace cptlab

// dynamics.hpp — Time propagation of the vectorized master equation

#pragma once

#include <map>
#include <string>
#include <vector>

#include "cptlab/generator.hpp"
#include "cptlab/model.hpp"
#include "cptlab/types.hpp"

namespace cptlab {

// Sampled solution of rho_dot = A'(t) rho. Every stored state satisfies the
// density-matrix invariants at tolerance 1e-6; times are strictly increasing.
// No trace renormalization is applied in flight -- the trace defect is kept as
// a diagnostic series.
struct Trajectory {
    std::vector<double> times;
    std::vector<DensityMatrix> states;
    std::map<std::string, std::vector<double>> observables;  // "rho00", "trace_defect"
};

inline constexpr double kDefaultRtol = 1e-9;
inline constexpr double kDefaultAtol = 1e-12;

// Adaptive embedded Runge-Kutta 5(4) integration with dense output sampled on
// output_grid (strictly increasing, starting at t >= 0; integration starts at
// t = 0). Throws IntegrationError on step-size underflow, std::invalid_argument
// on invalid rho0 or grid.
Trajectory propagate(const GeneratorSpec& spec, const DensityMatrix& rho0,
                     const std::vector<double>& output_grid,
                     double rtol = kDefaultRtol, double atol = kDefaultAtol);

// Fixed-step fourth-order Runge-Kutta on the same problem; debug oracle for the
// adaptive path. Takes n_substeps internal steps between consecutive grid points.
Trajectory propagate_rk4(const GeneratorSpec& spec, const DensityMatrix& rho0,
                         const std::vector<double>& output_grid, int n_substeps);

// Excited-state population rho00(t_k) per grid point.
std::vector<double> excited_population(const Trajectory& traj);

// Centered moving average of rho00 with the given window (in samples); window 1
// returns the raw series. Mirrors the presentation style of removing fast
// oscillations from population traces.
std::vector<double> excited_population_smoothed(const Trajectory& traj, int window);

// Propagates until the state changes by less than tol (max elementwise) over a
// probe interval of 1/gamma, or fails at t_max with a ConvergenceError carrying
// the last state and residual.
DensityMatrix converge_to_steady(const GeneratorSpec& spec, const DensityMatrix& rho0,
                                 double tol, double t_max);

} // namespace cptlab

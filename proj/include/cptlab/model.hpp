// model.hpp — Parameters, states, vectorization, and the dark state of the driven lambda system

#pragma once

#include <vector>

#include "cptlab/types.hpp"

namespace cptlab {

// Physical constants of the driven lambda system.
//
// Units: hbar = 1; every rate and frequency is an angular frequency in MHz and
// time is in microseconds, so MHz * us products are dimensionless. The field
// units of the stochastic bath b(t) are absorbed into the coupling: only the
// products gamma_e*c0 (MHz) and gamma_e^2*alpha (MHz) are physically meaningful.
struct SystemParams {
    double gamma = 0.0;    // excited-state decay rate
    double omega1 = 0.0;   // Rabi frequency of the |1> <-> |0> drive
    double omega2 = 0.0;   // Rabi frequency of the |2> <-> |0> drive
    double phi1 = 0.0;     // drive phases (radians)
    double phi2 = 0.0;
    double delta1 = 0.0;   // laser detunings
    double delta2 = 0.0;
    double gamma_e = 1.0;  // gyromagnetic coupling (MHz per field unit)

    // Throws std::invalid_argument on nonfinite or negative-rate input.
    void validate() const;
};

// Dark state cos(theta)|1> - e^{i phi} sin(theta)|2> with theta = atan2(omega1, omega2)
// and phi the relative drive phase. Depends on the Rabi frequencies only through
// their ratio. Throws std::invalid_argument when both Rabi frequencies vanish.
PureState dark_state(double omega1, double omega2, double phi);

// Row-major reordering between 3x3 matrices and 9-vectors. Pure reshuffling,
// no arithmetic; devectorize does not validate Hermiticity (intermediate ODE
// states may drift -- validate_density does that separately).
VectorizedState vectorize(const DensityMatrix& rho);
DensityMatrix devectorize(const VectorizedState& v);

struct DensityReport {
    double hermiticity_defect = 0.0;  // max elementwise |rho - rho^dag|
    double trace_defect = 0.0;        // |tr(rho) - 1|
    double min_eigenvalue = 0.0;      // of the Hermitian part
    bool passed = false;
};

// Reports Hermiticity defect, trace defect, and smallest eigenvalue; passes iff
// hermiticity_defect <= tol, trace_defect <= tol, and min_eigenvalue >= -tol.
DensityReport validate_density(const DensityMatrix& rho, double tol);

// |psi><psi| for a (not necessarily normalized) amplitude vector.
DensityMatrix projector(const PureState& psi);

// Trace distance (1/2)||a - b||_1 between Hermitian matrices.
double trace_distance(const DensityMatrix& a, const DensityMatrix& b);

// Uniformly spaced grid helpers used by sweeps and output sampling.
std::vector<double> linspace(double lo, double hi, int n);
std::vector<double> logspace(double lo, double hi, int n);  // lo, hi > 0

} // namespace cptlab

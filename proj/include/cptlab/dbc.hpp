// dbc.hpp — Dark-bright-common basis, effective Hamiltonian, and coupling strengths
//
// On resonance the drive couples only the bright and common states, with effective
// Rabi frequency Omega = sqrt(omega1^2 + omega2^2); the stochastic field enters as
// a dephasing of strength gamma_e cos(2 theta) between dark and bright plus a
// dark-bright mixing of strength gamma_e sin(2 theta). This basis is the algebraic
// oracle for the lab-frame generator and explains why the preparation fidelity
// dips at equal Rabi frequencies.

#pragma once

#include "cptlab/model.hpp"
#include "cptlab/types.hpp"

namespace cptlab {

// Orthonormal triple: common |c> = |0>, dark |d>, bright |b>, in lab-basis
// components, together with the mixing angle and phases that generated it.
struct DbcBasis {
    PureState c;
    PureState d;
    PureState b;
    double theta = 0.0;
    double phi1 = 0.0;
    double phi2 = 0.0;

    // Columns (c, d, b): the change-of-basis matrix from dbc to lab components.
    Eigen::Matrix3cd matrix() const;
};

// theta = atan2(omega1, omega2); throws on a degenerate (undriven) system.
DbcBasis dbc_basis(const SystemParams& params);

// Effective Hamiltonian for a frozen field sample b_value, written in (c, d, b)
// order, with its three labeled pieces. The dark-common entry is identically
// zero and the drive magnitude on b<->c is sqrt(omega1^2 + omega2^2)/2.
struct EffectiveHamiltonian {
    Eigen::Matrix3cd matrix;
    Eigen::Matrix3cd dephasing_term;  // -gamma_e cos(2 theta) b (P_dd - P_bb)
    Eigen::Matrix3cd coupling_term;   // -gamma_e sin(2 theta) b (e^{-i(phi1+phi2)} P_db + h.c.)
    Eigen::Matrix3cd drive_term;      // (Omega/2) (P_bc + P_cb)
};

EffectiveHamiltonian effective_hamiltonian(const SystemParams& params, double b_value);

// Max elementwise defect of the identity
//   P11 - P22 = cos(2 theta)(P_dd - P_bb)
//             + sin(2 theta)(e^{-i(phi1+phi2)} P_db + e^{i(phi1+phi2)} P_bd),
// with both sides constructed in the lab basis. Contract: < 1e-12 for all inputs.
double verify_decomposition(double theta, double phi1, double phi2);

// Magnitudes of the two bath couplings in the dbc basis; they satisfy
// dephasing^2 + mixing^2 = gamma_e^2 for every theta.
struct CouplingStrengths {
    double dephasing;  // gamma_e |cos 2 theta|
    double mixing;     // gamma_e |sin 2 theta|
};

CouplingStrengths coupling_strengths(double theta, double gamma_e);

// Lab-frame counterpart of effective_hamiltonian on resonance: rotating-frame
// drive plus the frozen-field term -gamma_e b (P11 - P22). Conjugating by the
// dbc change of basis must reproduce effective_hamiltonian().matrix.
Eigen::Matrix3cd lab_frame_hamiltonian(const SystemParams& params, double b_value);

// Max elementwise defect between V^dag H_lab V and H_eff; the unitary-equivalence
// check used by tests and the CLI selfcheck.
double dbc_equivalence_defect(const SystemParams& params, double b_value);

} // namespace cptlab

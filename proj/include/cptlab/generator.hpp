// generator.hpp — Assembly of the 9x9 master-equation generators
//
// The rotating-frame Hamiltonian is
//
//   H = delta2 |1><1| + delta1 |2><2|
//     + (omega1/2) (e^{-i phi1} |1><0| + h.c.)
//     + (omega2/2) (e^{-i phi2} |2><0| + h.c.),
//
// fixed (up to a global shift) by requiring that the induced equations of motion
// at delta2 = 0, phi1 = phi2 = 0 carry the two-photon detuning on rho12 and the
// one-photon detuning on rho02, with rho01 detuning-free. Spontaneous emission
// enters through the jump operators L_i = sqrt(Gamma/2) |i><0| (i = 1, 2); the
// classical dephasing bath through the time-local double-commutator dissipator
//   R_c[rho] = -gamma_e^2 alpha (Z^2 rho + rho Z^2 - 2 Z rho Z),
// with Z = |1><1| - |2><2|, which damps rho01/rho02 at gamma_e^2 alpha and
// rho12 at 4 gamma_e^2 alpha while leaving populations untouched.
//
// Two assembly routes are kept deliberately separate so each validates the other:
// build_noiseless / classical_dissipator transcribe the per-element coefficient
// formulas; the *_operator_form variants assemble the same maps from Kronecker
// identities applied to the operators themselves.

#pragma once

#include "cptlab/model.hpp"
#include "cptlab/noise.hpp"
#include "cptlab/types.hpp"

namespace cptlab {

enum class NoiseMode { None, Markovian, TimeVarying };

// Everything needed to evaluate the generator, possibly time-dependent.
struct GeneratorSpec {
    SystemParams params;
    NoiseMode mode = NoiseMode::None;
    NoiseStrength strength;   // used when mode == Markovian
    CorrelationModel model;   // used when mode == TimeVarying

    static GeneratorSpec noiseless(const SystemParams& params);
    static GeneratorSpec markovian(const SystemParams& params, const NoiseStrength& strength);
    static GeneratorSpec time_varying(const SystemParams& params, const CorrelationModel& model);

    void validate() const;
};

// Drive + detuning Hamiltonian in the rotating frame (3x3, Hermitian).
Eigen::Matrix3cd drive_hamiltonian(const SystemParams& params);

// Noiseless Lindblad generator: drive commutator plus the vacuum dissipator.
// Hand-transcribed coefficient rows.
Superoperator build_noiseless(const SystemParams& params);

// Classical-bath dissipator for strength gamma_e^2 * alpha_value. Diagonal in the
// vectorized basis. Throws on negative alpha_value.
Superoperator classical_dissipator(double gamma_e, double alpha_value);

// Combined generator A'(t): noiseless part plus R_c evaluated with alpha(t)
// (TimeVarying), the constant Markovian alpha, or omitted (None). The time
// argument is required only in the TimeVarying mode.
Superoperator build_full(const GeneratorSpec& spec, double t = 0.0);

// Operator-algebra route: -i[H, .] and the Lindblad dissipator of a single jump
// operator, assembled via Kronecker products on row-major vectorization.
Superoperator commutator_superop(const Eigen::Matrix3cd& hamiltonian);
Superoperator lindblad_superop(const Eigen::Matrix3cd& jump_op);
Superoperator build_noiseless_operator_form(const SystemParams& params);
Superoperator classical_dissipator_operator_form(double gamma_e, double alpha_value);

// Structural checks on a generator: the trace functional must be a left null
// vector, and the generator must commute with Hermitian conjugation of its
// argument. Both return max elementwise defects.
double trace_preservation_defect(const Superoperator& gen);
double hermiticity_preservation_defect(const Superoperator& gen);

} // namespace cptlab

#include "cptlab/dbc.hpp"

#include <cmath>
#include <stdexcept>

#include "cptlab/generator.hpp"

namespace cptlab {

Eigen::Matrix3cd DbcBasis::matrix() const {
    Eigen::Matrix3cd v;
    v.col(0) = c;
    v.col(1) = d;
    v.col(2) = b;
    return v;
}

DbcBasis dbc_basis(const SystemParams& params) {
    params.validate();
    if (params.omega1 == 0.0 && params.omega2 == 0.0) {
        throw std::invalid_argument("dbc_basis: degenerate drive (both Rabi frequencies zero)");
    }
    DbcBasis basis;
    basis.theta = std::atan2(params.omega1, params.omega2);
    basis.phi1 = params.phi1;
    basis.phi2 = params.phi2;
    const double ct = std::cos(basis.theta);
    const double st = std::sin(basis.theta);
    const Complex e1 = std::exp(kImag * params.phi1);
    const Complex e2 = std::exp(kImag * params.phi2);

    basis.c = PureState{1.0, 0.0, 0.0};
    basis.d = PureState{0.0, e2 * ct, -e1 * st};
    basis.b = PureState{0.0, std::conj(e1) * st, std::conj(e2) * ct};
    return basis;
}

EffectiveHamiltonian effective_hamiltonian(const SystemParams& params, double b_value) {
    const DbcBasis basis = dbc_basis(params);
    const double two_theta = 2.0 * basis.theta;
    const double omega_eff = std::hypot(params.omega1, params.omega2);
    const Complex phase = std::exp(-kImag * (params.phi1 + params.phi2));

    // (c, d, b) index order: c = 0, d = 1, b = 2.
    EffectiveHamiltonian h;
    h.dephasing_term = Eigen::Matrix3cd::Zero();
    h.dephasing_term(1, 1) = -params.gamma_e * std::cos(two_theta) * b_value;
    h.dephasing_term(2, 2) = +params.gamma_e * std::cos(two_theta) * b_value;

    h.coupling_term = Eigen::Matrix3cd::Zero();
    h.coupling_term(1, 2) = -params.gamma_e * std::sin(two_theta) * b_value * phase;
    h.coupling_term(2, 1) = std::conj(h.coupling_term(1, 2));

    h.drive_term = Eigen::Matrix3cd::Zero();
    h.drive_term(2, 0) = 0.5 * omega_eff;
    h.drive_term(0, 2) = 0.5 * omega_eff;

    h.matrix = h.dephasing_term + h.coupling_term + h.drive_term;
    return h;
}

double verify_decomposition(double theta, double phi1, double phi2) {
    // The identity holds for any angle, not just those reachable from
    // nonnegative Rabi frequencies; build the basis directly from theta.
    DbcBasis basis;
    basis.theta = theta;
    basis.phi1 = phi1;
    basis.phi2 = phi2;
    const Complex e1 = std::exp(kImag * phi1);
    const Complex e2 = std::exp(kImag * phi2);
    basis.c = PureState{1.0, 0.0, 0.0};
    basis.d = PureState{0.0, e2 * std::cos(theta), -e1 * std::sin(theta)};
    basis.b = PureState{0.0, std::conj(e1) * std::sin(theta), std::conj(e2) * std::cos(theta)};

    Eigen::Matrix3cd lhs = Eigen::Matrix3cd::Zero();
    lhs(1, 1) = 1.0;
    lhs(2, 2) = -1.0;

    const Eigen::Matrix3cd p_dd = projector(basis.d);
    const Eigen::Matrix3cd p_bb = projector(basis.b);
    const Eigen::Matrix3cd p_db = basis.d * basis.b.adjoint();
    const Eigen::Matrix3cd p_bd = basis.b * basis.d.adjoint();
    const Complex phase = std::exp(-kImag * (phi1 + phi2));

    const Eigen::Matrix3cd rhs = std::cos(2.0 * theta) * (p_dd - p_bb) +
                                 std::sin(2.0 * theta) *
                                     (phase * p_db + std::conj(phase) * p_bd);
    return (lhs - rhs).cwiseAbs().maxCoeff();
}

CouplingStrengths coupling_strengths(double theta, double gamma_e) {
    return CouplingStrengths{
        gamma_e * std::abs(std::cos(2.0 * theta)),
        gamma_e * std::abs(std::sin(2.0 * theta)),
    };
}

Eigen::Matrix3cd lab_frame_hamiltonian(const SystemParams& params, double b_value) {
    SystemParams resonant = params;
    resonant.delta1 = 0.0;
    resonant.delta2 = 0.0;
    Eigen::Matrix3cd h = drive_hamiltonian(resonant);
    h(1, 1) += -params.gamma_e * b_value;
    h(2, 2) += +params.gamma_e * b_value;
    return h;
}

double dbc_equivalence_defect(const SystemParams& params, double b_value) {
    const DbcBasis basis = dbc_basis(params);
    const Eigen::Matrix3cd v = basis.matrix();
    const Eigen::Matrix3cd transformed = v.adjoint() * lab_frame_hamiltonian(params, b_value) * v;
    return (transformed - effective_hamiltonian(params, b_value).matrix).cwiseAbs().maxCoeff();
}

} // namespace cptlab

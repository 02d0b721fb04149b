#include "cptlab/generator.hpp"

#include <cmath>
#include <stdexcept>

namespace cptlab {

namespace {

// Z = |1><1| - |2><2| eigenvalues per basis state.
constexpr double kZ[3] = {0.0, 1.0, -1.0};

} // namespace

GeneratorSpec GeneratorSpec::noiseless(const SystemParams& params) {
    GeneratorSpec spec;
    spec.params = params;
    spec.mode = NoiseMode::None;
    spec.validate();
    return spec;
}

GeneratorSpec GeneratorSpec::markovian(const SystemParams& params,
                                       const NoiseStrength& strength) {
    GeneratorSpec spec;
    spec.params = params;
    spec.mode = NoiseMode::Markovian;
    spec.strength = strength;
    spec.validate();
    return spec;
}

GeneratorSpec GeneratorSpec::time_varying(const SystemParams& params,
                                          const CorrelationModel& model) {
    GeneratorSpec spec;
    spec.params = params;
    spec.mode = NoiseMode::TimeVarying;
    spec.model = model;
    spec.validate();
    return spec;
}

void GeneratorSpec::validate() const {
    params.validate();
    if (mode == NoiseMode::TimeVarying) {
        model.validate();
        if (!(params.gamma_e > 0.0)) {
            throw std::invalid_argument(
                "GeneratorSpec: time-varying noise requires gamma_e > 0");
        }
    }
}

Eigen::Matrix3cd drive_hamiltonian(const SystemParams& p) {
    p.validate();
    const Complex lambda1 = 0.5 * p.omega1 * std::exp(-kImag * p.phi1);
    const Complex lambda2 = 0.5 * p.omega2 * std::exp(-kImag * p.phi2);
    Eigen::Matrix3cd h = Eigen::Matrix3cd::Zero();
    h(1, 1) = p.delta2;
    h(2, 2) = p.delta1;
    h(1, 0) = lambda1;
    h(0, 1) = std::conj(lambda1);
    h(2, 0) = lambda2;
    h(0, 2) = std::conj(lambda2);
    return h;
}

Superoperator build_noiseless(const SystemParams& p) {
    p.validate();
    const double g = p.gamma;
    const double d1 = p.delta1;
    const double d2 = p.delta2;
    const Complex l1 = 0.5 * p.omega1 * std::exp(-kImag * p.phi1);
    const Complex l2 = 0.5 * p.omega2 * std::exp(-kImag * p.phi2);
    const Complex l1c = std::conj(l1);
    const Complex l2c = std::conj(l2);
    const Complex i = kImag;

    Superoperator a = Superoperator::Zero();
    constexpr int r00 = flat_index(0, 0), r01 = flat_index(0, 1), r02 = flat_index(0, 2);
    constexpr int r10 = flat_index(1, 0), r11 = flat_index(1, 1), r12 = flat_index(1, 2);
    constexpr int r20 = flat_index(2, 0), r21 = flat_index(2, 1), r22 = flat_index(2, 2);

    // d rho00 / dt = -G rho00 + i l1 rho01 + i l2 rho02 - i l1* rho10 - i l2* rho20
    a(r00, r00) = -g;
    a(r00, r01) = i * l1;
    a(r00, r02) = i * l2;
    a(r00, r10) = -i * l1c;
    a(r00, r20) = -i * l2c;

    // d rho01 / dt = (-G/2 + i d2) rho01 + i l1* (rho00 - rho11) - i l2* rho21
    a(r01, r01) = Complex{-0.5 * g, d2};
    a(r01, r00) = i * l1c;
    a(r01, r11) = -i * l1c;
    a(r01, r21) = -i * l2c;

    // d rho02 / dt = (-G/2 + i d1) rho02 + i l2* (rho00 - rho22) - i l1* rho12
    a(r02, r02) = Complex{-0.5 * g, d1};
    a(r02, r00) = i * l2c;
    a(r02, r22) = -i * l2c;
    a(r02, r12) = -i * l1c;

    // d rho10 / dt = (-G/2 - i d2) rho10 - i l1 (rho00 - rho11) + i l2 rho12
    a(r10, r10) = Complex{-0.5 * g, -d2};
    a(r10, r00) = -i * l1;
    a(r10, r11) = i * l1;
    a(r10, r12) = i * l2;

    // d rho11 / dt = (G/2) rho00 - i l1 rho01 + i l1* rho10
    a(r11, r00) = 0.5 * g;
    a(r11, r01) = -i * l1;
    a(r11, r10) = i * l1c;

    // d rho12 / dt = i (d1 - d2) rho12 - i l1 rho02 + i l2* rho10
    a(r12, r12) = Complex{0.0, d1 - d2};
    a(r12, r02) = -i * l1;
    a(r12, r10) = i * l2c;

    // d rho20 / dt = (-G/2 - i d1) rho20 - i l2 (rho00 - rho22) + i l1 rho21
    a(r20, r20) = Complex{-0.5 * g, -d1};
    a(r20, r00) = -i * l2;
    a(r20, r22) = i * l2;
    a(r20, r21) = i * l1;

    // d rho21 / dt = -i (d1 - d2) rho21 + i l1* rho20 - i l2 rho01
    a(r21, r21) = Complex{0.0, d2 - d1};
    a(r21, r20) = i * l1c;
    a(r21, r01) = -i * l2;

    // d rho22 / dt = (G/2) rho00 - i l2 rho02 + i l2* rho20
    a(r22, r00) = 0.5 * g;
    a(r22, r02) = -i * l2;
    a(r22, r20) = i * l2c;

    return a;
}

Superoperator classical_dissipator(double gamma_e, double alpha_value) {
    if (alpha_value < 0.0) {
        throw std::invalid_argument("classical_dissipator: alpha_value must be >= 0");
    }
    const double rate = gamma_e * gamma_e * alpha_value;
    Superoperator r = Superoperator::Zero();
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            const double dz = kZ[i] - kZ[j];
            r(flat_index(i, j), flat_index(i, j)) = -rate * dz * dz;
        }
    }
    return r;
}

Superoperator build_full(const GeneratorSpec& spec, double t) {
    spec.validate();
    Superoperator a = build_noiseless(spec.params);
    switch (spec.mode) {
        case NoiseMode::None:
            break;
        case NoiseMode::Markovian:
            if (!spec.strength.is_noiseless()) {
                a += classical_dissipator(spec.params.gamma_e, spec.strength.alpha());
            }
            break;
        case NoiseMode::TimeVarying: {
            if (!(t >= 0.0)) {
                throw std::invalid_argument(
                    "build_full: time-varying mode requires t >= 0");
            }
            a += classical_dissipator(spec.params.gamma_e, alpha_t(spec.model, t));
            break;
        }
    }
    return a;
}

namespace {

// kron(A, B) for 3x3 blocks; row-major vectorization gives
// vec(A X B) = kron(A, B^T) vec(X).
Superoperator kron3(const Eigen::Matrix3cd& a, const Eigen::Matrix3cd& b) {
    Superoperator k;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) k.block<3, 3>(3 * i, 3 * j) = a(i, j) * b;
    return k;
}

const Eigen::Matrix3cd kId3 = Eigen::Matrix3cd::Identity();

} // namespace

Superoperator commutator_superop(const Eigen::Matrix3cd& h) {
    return -kImag * (kron3(h, kId3) - kron3(kId3, h.transpose()));
}

Superoperator lindblad_superop(const Eigen::Matrix3cd& l) {
    const Eigen::Matrix3cd ldl = l.adjoint() * l;
    return kron3(l, l.conjugate()) -
           0.5 * (kron3(ldl, kId3) + kron3(kId3, ldl.transpose()));
}

Superoperator build_noiseless_operator_form(const SystemParams& p) {
    p.validate();
    Superoperator a = commutator_superop(drive_hamiltonian(p));
    const double amp = std::sqrt(0.5 * p.gamma);
    for (int i = 1; i <= 2; ++i) {
        Eigen::Matrix3cd jump = Eigen::Matrix3cd::Zero();
        jump(i, 0) = amp;
        a += lindblad_superop(jump);
    }
    return a;
}

Superoperator classical_dissipator_operator_form(double gamma_e, double alpha_value) {
    if (alpha_value < 0.0) {
        throw std::invalid_argument(
            "classical_dissipator_operator_form: alpha_value must be >= 0");
    }
    Eigen::Matrix3cd z = Eigen::Matrix3cd::Zero();
    z(1, 1) = 1.0;
    z(2, 2) = -1.0;
    const Eigen::Matrix3cd z2 = z * z;
    const double rate = gamma_e * gamma_e * alpha_value;
    return -rate * (kron3(z2, kId3) + kron3(kId3, z2.transpose()) -
                    2.0 * kron3(z, z.transpose()));
}

double trace_preservation_defect(const Superoperator& gen) {
    double defect = 0.0;
    for (int c = 0; c < 9; ++c) {
        const Complex column_sum =
            gen(flat_index(0, 0), c) + gen(flat_index(1, 1), c) + gen(flat_index(2, 2), c);
        defect = std::max(defect, std::abs(column_sum));
    }
    return defect;
}

double hermiticity_preservation_defect(const Superoperator& gen) {
    // Generator of a Hermiticity-preserving map: A[(j,i),(l,k)] = conj(A[(i,j),(k,l)]).
    double defect = 0.0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k)
                for (int l = 0; l < 3; ++l) {
                    const Complex lhs = gen(flat_index(j, i), flat_index(l, k));
                    const Complex rhs = std::conj(gen(flat_index(i, j), flat_index(k, l)));
                    defect = std::max(defect, std::abs(lhs - rhs));
                }
    return defect;
}

} // namespace cptlab

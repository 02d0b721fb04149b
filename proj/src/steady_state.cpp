#include "cptlab/steady_state.hpp"

#include <cmath>
#include <stdexcept>

#include "cptlab/errors.hpp"

namespace cptlab {

namespace {

constexpr double kNullityTol = 1e-10;  // relative to the generator norm

VectorizedState trace_functional() {
    VectorizedState tr = VectorizedState::Zero();
    tr(flat_index(0, 0)) = 1.0;
    tr(flat_index(1, 1)) = 1.0;
    tr(flat_index(2, 2)) = 1.0;
    return tr;
}

} // namespace

SteadySolution solve_steady(const Superoperator& gen) {
    Eigen::JacobiSVD<Superoperator> svd(gen, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();  // descending
    SteadySolution sol;
    sol.norm = sv(0);
    sol.smallest_sv = sv(8);
    sol.second_sv = sv(7);
    sol.nullity_gap = (sv(7) > 0.0) ? sv(8) / sv(7) : 1.0;

    if (sol.norm == 0.0 || sol.second_sv <= kNullityTol * sol.norm) {
        throw NonUniqueSteadyStateError(
            "solve_steady: generator null space has dimension >= 2 (no unique steady state)",
            sol.smallest_sv, sol.second_sv, sol.norm);
    }

    // Primary route: replace the rho00 row with the trace constraint.
    Superoperator constrained = gen;
    constrained.row(flat_index(0, 0)) = trace_functional().transpose();
    VectorizedState rhs = VectorizedState::Zero();
    rhs(flat_index(0, 0)) = 1.0;

    Eigen::FullPivLU<Superoperator> lu(constrained);
    VectorizedState rho_vec;
    if (lu.isInvertible()) {
        rho_vec = lu.solve(rhs);
    } else {
        // Fallback: smallest right-singular vector, normalized to unit trace.
        VectorizedState kernel = svd.matrixV().col(8);
        const Complex tr = kernel(0) + kernel(4) + kernel(8);
        if (std::abs(tr) < 1e-14) {
            throw NonUniqueSteadyStateError(
                "solve_steady: null vector is traceless; no normalizable steady state",
                sol.smallest_sv, sol.second_sv, sol.norm);
        }
        rho_vec = kernel / tr;
    }

    sol.residual = (gen * rho_vec).cwiseAbs().maxCoeff();

    DensityMatrix rho = devectorize(rho_vec);
    sol.state = 0.5 * (rho + rho.adjoint());
    return sol;
}

double steady_excited_population(const SystemParams& params, const NoiseStrength& noise,
                                 double delta) {
    if (!(params.gamma > 0.0)) {
        throw std::invalid_argument("steady_excited_population: gamma must be > 0");
    }
    SystemParams p = params;
    p.delta1 = delta;
    p.delta2 = 0.0;
    const GeneratorSpec spec = noise.is_noiseless()
                                   ? GeneratorSpec::noiseless(p)
                                   : GeneratorSpec::markovian(p, noise);
    const SteadySolution sol = solve_steady(build_full(spec));
    return sol.state(0, 0).real();
}

} // namespace cptlab

#include "cptlab/model.hpp"

#include <cmath>
#include <stdexcept>

namespace cptlab {

void SystemParams::validate() const {
    auto finite = [](double x) { return std::isfinite(x); };
    if (!finite(gamma) || !finite(omega1) || !finite(omega2) || !finite(phi1) ||
        !finite(phi2) || !finite(delta1) || !finite(delta2) || !finite(gamma_e)) {
        throw std::invalid_argument("SystemParams: all parameters must be finite");
    }
    if (gamma < 0.0) throw std::invalid_argument("SystemParams: gamma must be >= 0");
    if (omega1 < 0.0 || omega2 < 0.0) {
        throw std::invalid_argument("SystemParams: Rabi frequencies must be >= 0");
    }
}

PureState dark_state(double omega1, double omega2, double phi) {
    if (omega1 == 0.0 && omega2 == 0.0) {
        throw std::invalid_argument(
            "dark_state: degenerate drive (omega1 = omega2 = 0 leaves theta undefined)");
    }
    const double theta = std::atan2(omega1, omega2);
    PureState d;
    d(0) = 0.0;
    d(1) = std::cos(theta);
    d(2) = -std::exp(kImag * phi) * std::sin(theta);
    return d;
}

VectorizedState vectorize(const DensityMatrix& rho) {
    VectorizedState v;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) v(flat_index(i, j)) = rho(i, j);
    return v;
}

DensityMatrix devectorize(const VectorizedState& v) {
    DensityMatrix rho;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) rho(i, j) = v(flat_index(i, j));
    return rho;
}

DensityReport validate_density(const DensityMatrix& rho, double tol) {
    if (!(tol > 0.0)) throw std::invalid_argument("validate_density: tol must be > 0");
    DensityReport report;
    report.hermiticity_defect = (rho - rho.adjoint()).cwiseAbs().maxCoeff();
    report.trace_defect = std::abs(rho.trace() - Complex{1.0, 0.0});
    const DensityMatrix herm = 0.5 * (rho + rho.adjoint());
    Eigen::SelfAdjointEigenSolver<DensityMatrix> es(herm);
    report.min_eigenvalue = es.eigenvalues().minCoeff();
    report.passed = report.hermiticity_defect <= tol && report.trace_defect <= tol &&
                    report.min_eigenvalue >= -tol;
    return report;
}

DensityMatrix projector(const PureState& psi) { return psi * psi.adjoint(); }

double trace_distance(const DensityMatrix& a, const DensityMatrix& b) {
    const DensityMatrix diff = 0.5 * ((a - b) + (a - b).adjoint());
    Eigen::SelfAdjointEigenSolver<DensityMatrix> es(diff);
    return 0.5 * es.eigenvalues().cwiseAbs().sum();
}

std::vector<double> linspace(double lo, double hi, int n) {
    if (n < 1) throw std::invalid_argument("linspace: need at least one point");
    std::vector<double> grid(static_cast<std::size_t>(n));
    if (n == 1) {
        grid[0] = lo;
        return grid;
    }
    const double step = (hi - lo) / static_cast<double>(n - 1);
    for (int k = 0; k < n; ++k) grid[static_cast<std::size_t>(k)] = lo + step * k;
    grid.back() = hi;
    return grid;
}

std::vector<double> logspace(double lo, double hi, int n) {
    if (!(lo > 0.0) || !(hi > 0.0)) {
        throw std::invalid_argument("logspace: endpoints must be positive");
    }
    std::vector<double> grid = linspace(std::log(lo), std::log(hi), n);
    for (double& x : grid) x = std::exp(x);
    grid.back() = hi;
    if (n > 1) grid.front() = lo;
    return grid;
}

} // namespace cptlab

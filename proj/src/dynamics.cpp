#include "cptlab/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>

#include "cptlab/errors.hpp"

namespace cptlab {

namespace {

// Dormand-Prince 5(4) tableau.
constexpr double c2 = 1.0 / 5.0, c3 = 3.0 / 10.0, c4 = 4.0 / 5.0, c5 = 8.0 / 9.0;
constexpr double a21 = 1.0 / 5.0;
constexpr double a31 = 3.0 / 40.0, a32 = 9.0 / 40.0;
constexpr double a41 = 44.0 / 45.0, a42 = -56.0 / 15.0, a43 = 32.0 / 9.0;
constexpr double a51 = 19372.0 / 6561.0, a52 = -25360.0 / 2187.0;
constexpr double a53 = 64448.0 / 6561.0, a54 = -212.0 / 729.0;
constexpr double a61 = 9017.0 / 3168.0, a62 = -355.0 / 33.0, a63 = 46732.0 / 5247.0;
constexpr double a64 = 49.0 / 176.0, a65 = -5103.0 / 18656.0;
constexpr double a71 = 35.0 / 384.0, a73 = 500.0 / 1113.0, a74 = 125.0 / 192.0;
constexpr double a75 = -2187.0 / 6784.0, a76 = 11.0 / 84.0;

// Embedded error weights b5 - b4.
constexpr double e1 = 71.0 / 57600.0, e3 = -71.0 / 16695.0, e4 = 71.0 / 1920.0;
constexpr double e5 = -17253.0 / 339200.0, e6 = 22.0 / 525.0, e7 = -1.0 / 40.0;

// Dense-output weights (quartic interpolant).
constexpr double d1 = -12715105075.0 / 11282082432.0;
constexpr double d3 = 87487479700.0 / 32700410799.0;
constexpr double d4 = -10690763975.0 / 1880347072.0;
constexpr double d5 = 701980252875.0 / 199316789632.0;
constexpr double d6 = -1453857185.0 / 822651844.0;
constexpr double d7 = 69997945.0 / 29380423.0;

using Rhs = std::function<void(double, const VectorizedState&, VectorizedState&)>;

// Right-hand side A'(t) y with the time-varying dephasing applied as a diagonal
// correction on top of the precomputed noiseless part.
Rhs make_rhs(const GeneratorSpec& spec) {
    switch (spec.mode) {
        case NoiseMode::None:
        case NoiseMode::Markovian: {
            const Superoperator gen = build_full(spec);
            return [gen](double, const VectorizedState& y, VectorizedState& dy) {
                dy = gen * y;
            };
        }
        case NoiseMode::TimeVarying: {
            const Superoperator base = build_noiseless(spec.params);
            const CorrelationModel model = spec.model;
            const double ge2 = spec.params.gamma_e * spec.params.gamma_e;
            VectorizedState damping;  // (z_i - z_j)^2 per component
            const double z[3] = {0.0, 1.0, -1.0};
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j) {
                    const double dz = z[i] - z[j];
                    damping(flat_index(i, j)) = dz * dz;
                }
            return [base, model, ge2, damping](double t, const VectorizedState& y,
                                               VectorizedState& dy) {
                dy = base * y;
                const double rate = ge2 * alpha_t(model, t);
                dy -= rate * damping.cwiseProduct(y);
            };
        }
    }
    throw std::logic_error("make_rhs: unknown noise mode");
}

double error_norm(const VectorizedState& err, const VectorizedState& y0,
                  const VectorizedState& y1, double rtol, double atol) {
    double sum = 0.0;
    for (int i = 0; i < 9; ++i) {
        const double sc = atol + rtol * std::max(std::abs(y0(i)), std::abs(y1(i)));
        const double q = std::abs(err(i)) / sc;
        sum += q * q;
    }
    return std::sqrt(sum / 9.0);
}

// One integration pass with dense output delivered through a callback. Samples
// are the times in output_grid that fall inside [t0, t1]; integration always
// runs to t1.
struct Dopri5 {
    Rhs rhs;
    double rtol;
    double atol;

    void integrate(double t0, double t1, VectorizedState& y,
                   const std::vector<double>& output_grid,
                   const std::function<void(double, const VectorizedState&)>& emit) {
        std::size_t grid_pos = 0;
        while (grid_pos < output_grid.size() && output_grid[grid_pos] < t0) ++grid_pos;
        if (grid_pos < output_grid.size() && output_grid[grid_pos] == t0) {
            emit(t0, y);
            ++grid_pos;
        }

        const double span = t1 - t0;
        if (!(span > 0.0)) return;
        const double h_min = std::max(1e-14, 1e-13 * span);

        double t = t0;
        double h = std::min(1e-4 * span + 1e-12, span);
        VectorizedState k1, k2, k3, k4, k5, k6, k7, ytmp, ynew, yerr;
        rhs(t, y, k1);
        bool rejected = false;

        while (t < t1) {
            if (h < h_min) {
                throw IntegrationError("propagate: step size underflow", t);
            }
            if (t + h > t1) h = t1 - t;

            ytmp = y + h * (a21 * k1);
            rhs(t + c2 * h, ytmp, k2);
            ytmp = y + h * (a31 * k1 + a32 * k2);
            rhs(t + c3 * h, ytmp, k3);
            ytmp = y + h * (a41 * k1 + a42 * k2 + a43 * k3);
            rhs(t + c4 * h, ytmp, k4);
            ytmp = y + h * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4);
            rhs(t + c5 * h, ytmp, k5);
            ytmp = y + h * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5);
            rhs(t + h, ytmp, k6);
            ynew = y + h * (a71 * k1 + a73 * k3 + a74 * k4 + a75 * k5 + a76 * k6);
            rhs(t + h, ynew, k7);  // FSAL

            yerr = h * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7);
            const double err = error_norm(yerr, y, ynew, rtol, atol);

            if (err <= 1.0) {
                // Dense output over [t, t+h].
                if (grid_pos < output_grid.size() &&
                    output_grid[grid_pos] <= t + h * (1.0 + 1e-12)) {
                    const VectorizedState ydiff = ynew - y;
                    const VectorizedState bspl = h * k1 - ydiff;
                    const VectorizedState r4 = ydiff - h * k7 - bspl;
                    const VectorizedState r5 =
                        h * (d1 * k1 + d3 * k3 + d4 * k4 + d5 * k5 + d6 * k6 + d7 * k7);
                    while (grid_pos < output_grid.size() &&
                           output_grid[grid_pos] <= t + h * (1.0 + 1e-12)) {
                        const double theta =
                            std::clamp((output_grid[grid_pos] - t) / h, 0.0, 1.0);
                        const double theta1 = 1.0 - theta;
                        const VectorizedState ys =
                            y + theta * (ydiff + theta1 * (bspl + theta * (r4 + theta1 * r5)));
                        emit(output_grid[grid_pos], ys);
                        ++grid_pos;
                    }
                }
                t += h;
                y = ynew;
                k1 = k7;
                const double fac =
                    (err == 0.0) ? 10.0
                                 : std::clamp(0.9 * std::pow(err, -0.2), 0.2, 10.0);
                h *= rejected ? std::min(fac, 1.0) : fac;
                rejected = false;
            } else {
                h *= std::clamp(0.9 * std::pow(err, -0.2), 0.2, 1.0);
                rejected = true;
            }
        }
    }
};

DensityMatrix checked_initial_state(const DensityMatrix& rho0) {
    const DensityReport report = validate_density(rho0, 1e-8);
    if (!report.passed) {
        throw std::invalid_argument("propagate: rho0 is not a valid density matrix");
    }
    return rho0;
}

void check_grid(const std::vector<double>& grid) {
    if (grid.empty()) throw std::invalid_argument("propagate: output grid is empty");
    if (grid.front() < 0.0) {
        throw std::invalid_argument("propagate: output grid must start at t >= 0");
    }
    for (std::size_t k = 1; k < grid.size(); ++k) {
        if (!(grid[k] > grid[k - 1])) {
            throw std::invalid_argument("propagate: output grid must be strictly increasing");
        }
    }
}

void append_sample(Trajectory& traj, double t, const VectorizedState& y) {
    const DensityMatrix rho = devectorize(y);
    const DensityReport report = validate_density(rho, 1e-6);
    if (!report.passed) {
        throw IntegrationError("propagate: sampled state violates density invariants", t);
    }
    traj.times.push_back(t);
    traj.states.push_back(rho);
    traj.observables["rho00"].push_back(rho(0, 0).real());
    traj.observables["trace_defect"].push_back(report.trace_defect);
}

} // namespace

Trajectory propagate(const GeneratorSpec& spec, const DensityMatrix& rho0,
                     const std::vector<double>& output_grid, double rtol, double atol) {
    spec.validate();
    check_grid(output_grid);
    if (!(rtol > 0.0) || !(atol > 0.0)) {
        throw std::invalid_argument("propagate: tolerances must be positive");
    }
    VectorizedState y = vectorize(checked_initial_state(rho0));

    Trajectory traj;
    Dopri5 stepper{make_rhs(spec), rtol, atol};
    stepper.integrate(0.0, output_grid.back(), y, output_grid,
                      [&traj](double t, const VectorizedState& ys) {
                          append_sample(traj, t, ys);
                      });
    return traj;
}

Trajectory propagate_rk4(const GeneratorSpec& spec, const DensityMatrix& rho0,
                         const std::vector<double>& output_grid, int n_substeps) {
    spec.validate();
    check_grid(output_grid);
    if (n_substeps < 1) throw std::invalid_argument("propagate_rk4: n_substeps must be >= 1");
    VectorizedState y = vectorize(checked_initial_state(rho0));
    const Rhs rhs = make_rhs(spec);

    Trajectory traj;
    double t = 0.0;
    VectorizedState k1, k2, k3, k4, ytmp;
    if (output_grid.front() == 0.0) append_sample(traj, 0.0, y);
    for (std::size_t g = (output_grid.front() == 0.0) ? 1 : 0; g < output_grid.size(); ++g) {
        const double h = (output_grid[g] - t) / n_substeps;
        for (int s = 0; s < n_substeps; ++s) {
            rhs(t, y, k1);
            ytmp = y + 0.5 * h * k1;
            rhs(t + 0.5 * h, ytmp, k2);
            ytmp = y + 0.5 * h * k2;
            rhs(t + 0.5 * h, ytmp, k3);
            ytmp = y + h * k3;
            rhs(t + h, ytmp, k4);
            y += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
            t += h;
        }
        t = output_grid[g];
        append_sample(traj, t, y);
    }
    return traj;
}

std::vector<double> excited_population(const Trajectory& traj) {
    if (traj.states.empty()) {
        throw std::invalid_argument("excited_population: empty trajectory");
    }
    std::vector<double> series;
    series.reserve(traj.states.size());
    for (const DensityMatrix& rho : traj.states) series.push_back(rho(0, 0).real());
    return series;
}

std::vector<double> excited_population_smoothed(const Trajectory& traj, int window) {
    if (window < 1) {
        throw std::invalid_argument("excited_population_smoothed: window must be >= 1");
    }
    const std::vector<double> raw = excited_population(traj);
    if (window == 1) return raw;
    const int n = static_cast<int>(raw.size());
    const int half = (window - 1) / 2;
    std::vector<double> smooth(raw.size());
    for (int k = 0; k < n; ++k) {
        const int lo = std::max(0, k - half);
        const int hi = std::min(n - 1, k + half);
        double acc = 0.0;
        for (int j = lo; j <= hi; ++j) acc += raw[static_cast<std::size_t>(j)];
        smooth[static_cast<std::size_t>(k)] = acc / (hi - lo + 1);
    }
    return smooth;
}

DensityMatrix converge_to_steady(const GeneratorSpec& spec, const DensityMatrix& rho0,
                                 double tol, double t_max) {
    spec.validate();
    if (!(tol > 0.0)) throw std::invalid_argument("converge_to_steady: tol must be > 0");
    const double probe = (spec.params.gamma > 0.0) ? 1.0 / spec.params.gamma : 1.0;

    VectorizedState y = vectorize(checked_initial_state(rho0));
    Dopri5 stepper{make_rhs(spec), kDefaultRtol, kDefaultAtol};

    double t = 0.0;
    double residual = std::numeric_limits<double>::infinity();
    while (true) {
        if (t + probe > t_max) {
            throw ConvergenceError("converge_to_steady: no convergence by t_max",
                                   devectorize(y), residual);
        }
        const VectorizedState previous = y;
        stepper.integrate(t, t + probe, y, {}, [](double, const VectorizedState&) {});
        t += probe;
        residual = (y - previous).cwiseAbs().maxCoeff();
        if (residual < tol) return devectorize(y);
    }
}

} // namespace cptlab

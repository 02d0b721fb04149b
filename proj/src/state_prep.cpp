#include "cptlab/state_prep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "cptlab/errors.hpp"
#include "cptlab/generator.hpp"
#include "cptlab/parallel.hpp"
#include "cptlab/steady_state.hpp"

namespace cptlab {

namespace {

SystemParams sweep_params(double omega1, double omega2, const NoiseStrength& noise,
                          double gamma) {
    SystemParams p;
    p.gamma = gamma;
    p.omega1 = omega1;
    p.omega2 = omega2;
    p.gamma_e = noise.gamma_e();
    return p;
}

std::string format_full(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

} // namespace

double fidelity(const SystemParams& params, const NoiseStrength& noise) {
    params.validate();
    if (!(params.gamma > 0.0)) {
        throw std::invalid_argument("fidelity: gamma must be > 0");
    }
    if (params.delta1 != 0.0 || params.delta2 != 0.0) {
        throw std::invalid_argument(
            "fidelity: defined on resonance only (delta1 = delta2 = 0)");
    }
    const GeneratorSpec spec = noise.is_noiseless()
                                   ? GeneratorSpec::noiseless(params)
                                   : GeneratorSpec::markovian(params, noise);
    const SteadySolution sol = solve_steady(build_full(spec));
    const PureState d = dark_state(params.omega1, params.omega2, params.phi1 - params.phi2);
    const double f = (d.adjoint() * sol.state * d)(0, 0).real();
    if (f < -1e-9 || f > 1.0 + 1e-9) {
        throw InternalConsistencyError("fidelity: value escaped [0, 1]");
    }
    return f;
}

double fidelity_ratio_form(double ratio, double omega2, const NoiseStrength& noise,
                           double gamma) {
    if (!(ratio >= 0.0) || !(omega2 > 0.0)) {
        throw std::invalid_argument("fidelity_ratio_form: need ratio >= 0, omega2 > 0");
    }
    return fidelity(sweep_params(ratio * omega2, omega2, noise, gamma), noise);
}

SweepResult fidelity_vs_ratio(double omega2, const std::vector<double>& ratio_grid,
                              const NoiseStrength& noise, double gamma, int jobs) {
    if (!(omega2 > 0.0)) throw std::invalid_argument("fidelity_vs_ratio: omega2 must be > 0");
    for (double r : ratio_grid) {
        if (!(r > 0.0)) throw std::invalid_argument("fidelity_vs_ratio: ratios must be > 0");
    }
    SweepResult sweep;
    sweep.parameter_name = "rabi_ratio";
    sweep.value_name = "fidelity";
    sweep.grid = ratio_grid;
    sweep.values.resize(ratio_grid.size());
    parallel_for_index(ratio_grid.size(), jobs, [&](std::size_t k) {
        sweep.values[k] = fidelity_ratio_form(ratio_grid[k], omega2, noise, gamma);
    });
    sweep.metadata.emplace_back("omega2", format_full(omega2));
    sweep.metadata.emplace_back("gamma", format_full(gamma));
    append_noise_metadata(sweep, noise);
    sweep.validate();

    // The dip sits at maximal dark-bright mixing, i.e. at ratio 1; enforce when
    // the grid brackets it generously.
    if (sweep.grid.front() <= 0.1 && sweep.grid.back() >= 10.0) {
        std::size_t argmin = 0;
        std::size_t nearest_one = 0;
        double best_dist = std::abs(std::log(sweep.grid[0]));
        for (std::size_t k = 1; k < sweep.grid.size(); ++k) {
            if (sweep.values[k] < sweep.values[argmin]) argmin = k;
            const double dist = std::abs(std::log(sweep.grid[k]));
            if (dist < best_dist) {
                best_dist = dist;
                nearest_one = k;
            }
        }
        const auto gap = (argmin > nearest_one) ? argmin - nearest_one : nearest_one - argmin;
        if (gap > 1) {
            throw InternalConsistencyError(
                "fidelity_vs_ratio: minimum not at the grid point nearest ratio 1");
        }
    }
    return sweep;
}

SweepResult fidelity_vs_omega2(double ratio, const std::vector<double>& omega2_grid,
                               const NoiseStrength& noise, double gamma, int jobs) {
    for (double w : omega2_grid) {
        if (!(w > 0.0)) throw std::invalid_argument("fidelity_vs_omega2: omega2 must be > 0");
    }
    SweepResult sweep;
    sweep.parameter_name = "omega2";
    sweep.value_name = "fidelity";
    sweep.grid = omega2_grid;
    sweep.values.resize(omega2_grid.size());
    parallel_for_index(omega2_grid.size(), jobs, [&](std::size_t k) {
        sweep.values[k] = fidelity_ratio_form(ratio, omega2_grid[k], noise, gamma);
    });
    sweep.metadata.emplace_back("rabi_ratio", format_full(ratio));
    sweep.metadata.emplace_back("gamma", format_full(gamma));
    append_noise_metadata(sweep, noise);
    sweep.validate();

    if (sweep.values.size() > 1) {
        std::vector<double> sorted = sweep.values;
        std::sort(sorted.begin(), sorted.end());
        const auto idx = static_cast<std::size_t>(
            std::ceil(0.9 * static_cast<double>(sorted.size() - 1)));
        if (std::abs(sweep.values.back() - sorted[idx]) >= 1e-3) {
            throw InternalConsistencyError(
                "fidelity_vs_omega2: no saturation plateau at the top of the grid");
        }
    }
    return sweep;
}

SweepResult fidelity_vs_tau2(double ratio, double omega2,
                             const std::vector<double>& tau2_grid, double gamma,
                             int jobs) {
    for (double tau2 : tau2_grid) {
        if (!(tau2 > 0.0)) throw std::invalid_argument("fidelity_vs_tau2: tau2 must be > 0");
    }
    SweepResult sweep;
    sweep.parameter_name = "tau2";
    sweep.value_name = "fidelity";
    sweep.grid = tau2_grid;
    sweep.values.resize(tau2_grid.size());
    parallel_for_index(tau2_grid.size(), jobs, [&](std::size_t k) {
        const NoiseStrength noise = NoiseStrength::from_tau2(tau2_grid[k], 1.0);
        sweep.values[k] = fidelity_ratio_form(ratio, omega2, noise, gamma);
    });
    sweep.metadata.emplace_back("rabi_ratio", format_full(ratio));
    sweep.metadata.emplace_back("omega2", format_full(omega2));
    sweep.metadata.emplace_back("gamma", format_full(gamma));
    sweep.validate();

    for (std::size_t k = 1; k < sweep.values.size(); ++k) {
        if (!(sweep.values[k] > sweep.values[k - 1])) {
            throw InternalConsistencyError(
                "fidelity_vs_tau2: fidelity failed to increase strictly with tau2");
        }
    }
    return sweep;
}

double minimal_adequate_omega2(double ratio, const NoiseStrength& noise, double gamma,
                               double threshold_defect, double quality_floor) {
    if (!(threshold_defect > 0.0)) {
        throw std::invalid_argument("minimal_adequate_omega2: threshold_defect must be > 0");
    }
    auto f = [&](double omega2) { return fidelity_ratio_form(ratio, omega2, noise, gamma); };

    const double plateau = f(kOmega2SearchHi);
    if (plateau < quality_floor) {
        char msg[120];
        std::snprintf(msg, sizeof(msg),
                      "minimal_adequate_omega2: fidelity saturates at %.6g, below the "
                      "quality floor %.6g",
                      plateau, quality_floor);
        throw SaturationBelowThresholdError(msg, plateau);
    }

    const std::vector<double> grid = logspace(kOmega2SearchLo, kOmega2SearchHi, 61);
    std::size_t first_ok = grid.size();
    for (std::size_t k = 0; k < grid.size(); ++k) {
        if (plateau - f(grid[k]) < threshold_defect) {
            first_ok = k;
            break;
        }
    }
    if (first_ok == grid.size()) {
        throw InternalConsistencyError(
            "minimal_adequate_omega2: plateau point itself failed its own threshold");
    }
    if (first_ok == 0) return grid.front();

    double lo = grid[first_ok - 1];  // defect >= threshold
    double hi = grid[first_ok];      // defect <  threshold
    while ((hi - lo) > 1e-3 * lo) {
        const double mid = std::sqrt(lo * hi);
        if (plateau - f(mid) < threshold_defect) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return hi;
}

} // namespace cptlab

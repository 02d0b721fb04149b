#include "cptlab/analysis.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "cptlab/errors.hpp"
#include "cptlab/parallel.hpp"
#include "cptlab/steady_state.hpp"

namespace cptlab {

namespace {

std::string format_full(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

} // namespace

void SweepResult::validate() const {
    if (grid.size() != values.size()) {
        throw InternalConsistencyError("SweepResult: grid/value length mismatch");
    }
    for (std::size_t k = 1; k < grid.size(); ++k) {
        if (!(grid[k] > grid[k - 1])) {
            throw InternalConsistencyError("SweepResult: grid must be strictly increasing");
        }
    }
    for (double v : values) {
        if (!std::isfinite(v)) {
            throw InternalConsistencyError("SweepResult: non-finite value");
        }
    }
}

void append_params_metadata(SweepResult& sweep, const SystemParams& p) {
    sweep.metadata.emplace_back("gamma", format_full(p.gamma));
    sweep.metadata.emplace_back("omega1", format_full(p.omega1));
    sweep.metadata.emplace_back("omega2", format_full(p.omega2));
    sweep.metadata.emplace_back("phi1", format_full(p.phi1));
    sweep.metadata.emplace_back("phi2", format_full(p.phi2));
    sweep.metadata.emplace_back("delta1", format_full(p.delta1));
    sweep.metadata.emplace_back("delta2", format_full(p.delta2));
    sweep.metadata.emplace_back("gamma_e", format_full(p.gamma_e));
}

void append_noise_metadata(SweepResult& sweep, const NoiseStrength& noise) {
    if (noise.is_noiseless()) {
        sweep.metadata.emplace_back("noise", "noiseless");
    } else {
        sweep.metadata.emplace_back("noise", "markovian");
        sweep.metadata.emplace_back("alpha", format_full(noise.alpha()));
        sweep.metadata.emplace_back("tau2", format_full(noise.tau2()));
    }
}

SweepResult cpt_spectrum(const SystemParams& params, const NoiseStrength& noise,
                         const std::vector<double>& delta_grid, int jobs) {
    if (delta_grid.empty()) {
        throw std::invalid_argument("cpt_spectrum: delta grid is empty");
    }
    SweepResult sweep;
    sweep.parameter_name = "delta";
    sweep.value_name = "rho00_eq";
    sweep.grid = delta_grid;
    sweep.values.resize(delta_grid.size());
    parallel_for_index(delta_grid.size(), jobs, [&](std::size_t k) {
        sweep.values[k] = steady_excited_population(params, noise, delta_grid[k]);
    });
    append_params_metadata(sweep, params);
    append_noise_metadata(sweep, noise);
    sweep.validate();
    return sweep;
}

double dip_height(const SystemParams& params, const NoiseStrength& noise) {
    return steady_excited_population(params, noise, 0.0);
}

SweepResult dip_curve(const SystemParams& params, const std::vector<double>& tau2_grid,
                      int jobs) {
    for (double tau2 : tau2_grid) {
        if (!(tau2 > 0.0)) throw std::invalid_argument("dip_curve: tau2 values must be > 0");
    }
    SweepResult sweep;
    sweep.parameter_name = "tau2";
    sweep.value_name = "rho00_dip";
    sweep.grid = tau2_grid;
    sweep.values.resize(tau2_grid.size());
    parallel_for_index(tau2_grid.size(), jobs, [&](std::size_t k) {
        const NoiseStrength noise = NoiseStrength::from_tau2(tau2_grid[k], params.gamma_e);
        sweep.values[k] = dip_height(params, noise);
    });
    append_params_metadata(sweep, params);
    sweep.validate();
    for (std::size_t k = 1; k < sweep.values.size(); ++k) {
        if (!(sweep.values[k] < sweep.values[k - 1])) {
            throw InternalConsistencyError(
                "dip_curve: dip height failed to decrease strictly with tau2");
        }
    }
    return sweep;
}

double estimate_tau2(const SystemParams& params, double measured_p00, double tau2_lo,
                     double tau2_hi, double rel_tol) {
    if (!(rel_tol > 0.0)) throw std::invalid_argument("estimate_tau2: rel_tol must be > 0");
    if (!(tau2_lo > 0.0) || !(tau2_hi > tau2_lo)) {
        throw std::invalid_argument("estimate_tau2: need 0 < tau2_lo < tau2_hi");
    }
    if (!(measured_p00 > 0.0)) {
        throw NoiselessMeasurementError(
            "estimate_tau2: measured rho00 <= 0 is consistent with a noiseless bath; "
            "tau2 is unbounded");
    }

    auto height = [&](double tau2) {
        return dip_height(params, NoiseStrength::from_tau2(tau2, params.gamma_e));
    };
    const double h_lo = height(tau2_lo);
    const double h_hi = height(tau2_hi);
    if (!(measured_p00 < h_lo) || !(measured_p00 > h_hi)) {
        char msg[160];
        std::snprintf(msg, sizeof(msg),
                      "estimate_tau2: measurement %.6g outside bracket heights "
                      "[%.6g at tau2_hi, %.6g at tau2_lo]",
                      measured_p00, h_hi, h_lo);
        throw OutOfBracketError(msg, h_lo, h_hi, measured_p00);
    }

    // Bisection in log(tau2); the map is strictly decreasing in tau2.
    double lo = tau2_lo;
    double hi = tau2_hi;
    while ((hi - lo) > rel_tol * lo) {
        const double mid = std::sqrt(lo * hi);
        if (height(mid) > measured_p00) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return std::sqrt(lo * hi);
}

} // namespace cptlab

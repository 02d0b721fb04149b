// analysis.hpp — CPT spectra, dip characterization, and noise-parameter estimation

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cptlab/model.hpp"
#include "cptlab/noise.hpp"
#include "cptlab/types.hpp"

namespace cptlab {

// Labeled 1-D parameter sweep. The metadata block snapshots every input needed
// to reproduce the sweep exactly and is emitted as '#'-prefixed comment lines
// ahead of the CSV header.
struct SweepResult {
    std::string parameter_name;
    std::string value_name;
    std::vector<double> grid;
    std::vector<double> values;
    std::vector<std::pair<std::string, std::string>> metadata;

    // Strictly increasing grid, finite values, matching lengths.
    void validate() const;
};

// Steady excited-state population versus two-photon detuning (delta2 = 0 fixed).
SweepResult cpt_spectrum(const SystemParams& params, const NoiseStrength& noise,
                         const std::vector<double>& delta_grid, int jobs = 1);

// Steady rho00 at the dip (delta = 0) under a constant bath strength.
double dip_height(const SystemParams& params, const NoiseStrength& noise);

// Dip height over a tau2 grid. The curve must come out strictly decreasing --
// it underwrites the estimator -- so a non-monotone result throws
// InternalConsistencyError.
SweepResult dip_curve(const SystemParams& params, const std::vector<double>& tau2_grid,
                      int jobs = 1);

// Inverts the monotone map tau2 -> dip height by bisection. The bracket must
// straddle the measurement: dip_height(tau2_hi) < measured_p00 < dip_height(tau2_lo).
// Throws NoiselessMeasurementError for measured_p00 <= 0 and OutOfBracketError
// (carrying both endpoint heights) otherwise.
double estimate_tau2(const SystemParams& params, double measured_p00, double tau2_lo,
                     double tau2_hi, double rel_tol);

// Shared metadata snapshot helpers.
void append_params_metadata(SweepResult& sweep, const SystemParams& params);
void append_noise_metadata(SweepResult& sweep, const NoiseStrength& noise);

} // namespace cptlab

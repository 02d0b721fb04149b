// io.hpp — CSV emission with reproducible fixed-width numeric formatting

#pragma once

#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "cptlab/analysis.hpp"
#include "cptlab/dynamics.hpp"

namespace cptlab {

// 17-significant-digit decimal rendering; identical doubles always produce
// identical bytes, so rerunning a command reproduces its files exactly.
std::string format_sig17(double x);

// Trajectory CSV: '#' metadata block, header row, then one row per sample with
// columns t, rho00, rho11, rho22, re_rho01, im_rho01, re_rho02, im_rho02,
// re_rho12, im_rho12, trace_defect.
void write_trajectory_csv(std::ostream& os, const Trajectory& traj,
                          const std::vector<std::pair<std::string, std::string>>& metadata);

// Sweep CSV: '#' metadata block, then "<parameter_name>,<value_name>" rows.
void write_sweep_csv(std::ostream& os, const SweepResult& sweep);

} // namespace cptlab

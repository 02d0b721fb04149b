#include "cptlab/io.hpp"

#include <cmath>
#include <cstdio>

namespace cptlab {

std::string format_sig17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

void write_trajectory_csv(std::ostream& os, const Trajectory& traj,
                          const std::vector<std::pair<std::string, std::string>>& metadata) {
    for (const auto& [key, value] : metadata) os << "# " << key << " = " << value << "\n";
    os << "t,rho00,rho11,rho22,re_rho01,im_rho01,re_rho02,im_rho02,re_rho12,im_rho12,"
          "trace_defect\n";
    const auto& defects = traj.observables.at("trace_defect");
    for (std::size_t k = 0; k < traj.times.size(); ++k) {
        const DensityMatrix& rho = traj.states[k];
        os << format_sig17(traj.times[k]) << ',' << format_sig17(rho(0, 0).real()) << ','
           << format_sig17(rho(1, 1).real()) << ',' << format_sig17(rho(2, 2).real()) << ','
           << format_sig17(rho(0, 1).real()) << ',' << format_sig17(rho(0, 1).imag()) << ','
           << format_sig17(rho(0, 2).real()) << ',' << format_sig17(rho(0, 2).imag()) << ','
           << format_sig17(rho(1, 2).real()) << ',' << format_sig17(rho(1, 2).imag()) << ','
           << format_sig17(defects[k]) << '\n';
    }
}

void write_sweep_csv(std::ostream& os, const SweepResult& sweep) {
    for (const auto& [key, value] : sweep.metadata) {
        os << "# " << key << " = " << value << "\n";
    }
    os << sweep.parameter_name << ',' << sweep.value_name << '\n';
    for (std::size_t k = 0; k < sweep.grid.size(); ++k) {
        os << format_sig17(sweep.grid[k]) << ',' << format_sig17(sweep.values[k]) << '\n';
    }
}

} // namespace cptlab

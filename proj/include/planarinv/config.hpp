#pragma once

#include <cstdint>

namespace planarinv {

// Tolerances for genericity validation and integer rounding. All angle
// accumulation runs in double precision; every integer-valued quantity is
// rounded with an explicit residual check against these bounds.
struct ToleranceConfig {
    double min_angle_deg = 10.0;     // minimum transversality angle at a crossing
    double min_sep_frac = 0.01;      // minimum crossing separation, fraction of diameter
    double integer_residual = 0.05;  // Whitney-number rounding residual
    double index_residual = 0.1;     // double-index rounding residual
    double epsilon_frac = 0.25;      // excision radius, fraction of local clearance
    std::uint64_t seed = 1;

    double min_sep(double diameter) const { return min_sep_frac * diameter; }
};

}  // namespace planarinv

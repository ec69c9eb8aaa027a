// Memoryless truncated Levy-flight forager, the comparison baseline.
#pragma once

#include <cstdint>

#include "wormnav/environment.hpp"
#include "wormnav/trial.hpp"

namespace wormnav {

struct LevyParams {
    double s_min = 0.2649; // mm, lower truncation (most probable run length)
    double s_max = 40.0;   // mm, upper truncation
    double speed = 0.3;    // mm/s
    // Power-law exponent is fixed at 2: P(l) proportional to 1/l^2.
};

// Inverse CDF of the truncated 1/l^2 density on [s_min, s_max]:
//   l(u) = 1 / (1/s_min - u * (1/s_min - 1/s_max)),  u in [0, 1].
double sample_flight_length(double u, const LevyParams& p);

// Analytic CDF of the same law (test oracle and KS reference).
double levy_cdf(double l, const LevyParams& p);

// Walk flights of Levy-distributed length in uniformly random directions at
// constant speed, reflecting at the walls (a reflected flight keeps its
// remaining length). Success is checked every step: the true field value
// within 0.5 mM of c_track. The walk continues to `duration` so the
// post-lock deviation is defined the same way as for the network worm.
TrialResult run_levy_trial(const ConcentrationField& field, double start_x,
                           double start_y, double c_track, double duration,
                           double dt, const LevyParams& p, std::uint64_t seed,
                           Trajectory* traj_out = nullptr);

} // namespace wormnav

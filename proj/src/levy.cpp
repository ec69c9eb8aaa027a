#include "wormnav/levy.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "wormnav/random.hpp"

namespace wormnav {

double sample_flight_length(double u, const LevyParams& p) {
    if (u < 0.0 || u > 1.0) {
        throw std::invalid_argument("flight-length quantile must be in [0, 1]");
    }
    const double l = 1.0 / (1.0 / p.s_min - u * (1.0 / p.s_min - 1.0 / p.s_max));
    // The reciprocal round-trip can land an ulp outside the support.
    return std::clamp(l, p.s_min, p.s_max);
}

double levy_cdf(double l, const LevyParams& p) {
    if (l <= p.s_min) return 0.0;
    if (l >= p.s_max) return 1.0;
    return (1.0 / p.s_min - 1.0 / l) / (1.0 / p.s_min - 1.0 / p.s_max);
}

TrialResult run_levy_trial(const ConcentrationField& field, double start_x,
                           double start_y, double c_track, double duration,
                           double dt, const LevyParams& p, std::uint64_t seed,
                           Trajectory* traj_out) {
    RandomStream rng(seed);
    double x = start_x;
    double y = start_y;
    double heading = rng.uniform(-std::numbers::pi, std::numbers::pi);
    double remaining = sample_flight_length(rng.uniform01(), p);

    TrialResult result;
    result.seed = seed;

    double deviation_sum = 0.0;
    long deviation_n = 0;

    const auto steps = static_cast<long>(std::llround(duration / dt));
    long record_every = 1;
    if (traj_out != nullptr) {
        record_every = std::max(1L, std::lround(traj_out->record_dt / dt));
        traj_out->samples.clear();
        traj_out->raster.clear();
    }

    for (long i = 0; i <= steps; ++i) {
        const double t = static_cast<double>(i) * dt;
        const double c = field.value_at(x, y);

        if (!result.success && std::abs(c - c_track) <= 0.5) {
            result.success = true;
            result.time_to_target = t;
        } else if (result.success) {
            deviation_sum += std::abs(c - c_track);
            ++deviation_n;
        }

        if (traj_out != nullptr && i % record_every == 0) {
            traj_out->samples.push_back({t, x, y, heading, p.speed, c});
        }
        if (i == steps) break;

        advance_with_reflection(x, y, heading, p.speed * dt, field);
        remaining -= p.speed * dt;
        if (remaining <= 0.0) {
            heading = rng.uniform(-std::numbers::pi, std::numbers::pi);
            remaining = sample_flight_length(rng.uniform01(), p);
        }
    }

    if (deviation_n > 0) {
        result.post_lock_mean_deviation = deviation_sum / static_cast<double>(deviation_n);
    }
    return result;
}

} // namespace wormnav

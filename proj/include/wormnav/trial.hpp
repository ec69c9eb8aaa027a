// Shared trial record types: trajectories, spike rasters, per-trial results.
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace wormnav {

struct TrajectorySample {
    double t = 0.0;       // s
    double x = 0.0;       // mm
    double y = 0.0;       // mm
    double heading = 0.0; // rad
    double speed = 0.0;   // mm/s
    double c = 0.0;       // mM, sensed (possibly noisy) concentration
};

struct SpikeEvent {
    double t = 0.0; // s
    int neuron = 0; // 1..7
};

struct Trajectory {
    double record_dt = 0.1;                // s, sample spacing
    std::vector<TrajectorySample> samples; // uniformly sampled, starts at t = 0
    std::vector<SpikeEvent> raster;        // spikes at native dt resolution
};

struct TrialResult {
    bool success = false;
    std::optional<double> time_to_target;           // s, absent on failure
    std::optional<double> post_lock_mean_deviation; // mM, absent if never locked
    std::uint64_t seed = 0;
};

} // namespace wormnav

// Experiment harness: single trials, seeded batches, lock/deviation
// statistics, gradient-detector frequency curves, and step-response traces.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wormnav/config.hpp"
#include "wormnav/environment.hpp"
#include "wormnav/levy.hpp"
#include "wormnav/network.hpp"
#include "wormnav/trial.hpp"

namespace wormnav {

struct TrialSetup {
    double duration = 1500.0; // s
    double dt = 1e-3;         // s
    double record_dt = 0.1;   // s
    double start_x = 30.0;    // mm
    double start_y = 30.0;    // mm
    NoiseModel noise;         // sensor noise only; lock/deviation use the true field
};

// Success band around the set-point, mM.
inline constexpr double kLockBand = 0.5;

struct LockStats {
    std::optional<double> lock_time;      // s, first sample within the band
    std::optional<double> mean_deviation; // mM, mean |C_true - c_track| after lock
};

// Lock time and post-lock tracking deviation of a recorded trajectory,
// evaluated against the noiseless field at the recorded positions.
LockStats lock_and_deviation(const Trajectory& traj, const ConcentrationField& field,
                             double c_track);

struct TrialOutput {
    Trajectory traj;
    TrialResult result;
};

// One deterministic network trial: sense (optionally noisy), step the
// network, apply motor commands, record. The initial heading is the first
// draw from the trial's random stream.
TrialOutput run_trial(const NetworkConfig& net_cfg, const MotorParams& motor,
                      const ConcentrationField& field, const TrialSetup& setup,
                      std::uint64_t seed);

enum class WalkerKind { Snn, Levy };

struct BatchStats {
    int n_trials = 0;
    double success_rate = 0.0;
    std::vector<double> success_times; // sorted, s
    std::optional<double> mean_deviation; // mM, over successful trials
    std::vector<TrialResult> records;  // one per trial, in seed order

    double fraction_under(double t) const; // of all trials, success within t
};

// Fold per-trial records into batch statistics (pure; re-runnable on
// exported records).
BatchStats aggregate(std::vector<TrialResult> records);

// Everything needed to run one experiment, resolved from a Config.
struct Experiment {
    NetworkConfig net;
    MotorParams motor;
    ConcentrationField field;
    TrialSetup setup;
    LevyParams levy;

    static Experiment from_config(const Config& cfg);
};

// Trials with seeds base_seed .. base_seed+n-1, run on n_threads workers
// (trials are independent; aggregation is a single-threaded reduction).
BatchStats run_batch(WalkerKind kind, int n, std::uint64_t base_seed,
                     const Experiment& exp, int n_threads = 0);

// Spike frequency of the gradient detectors under constant concentration
// ramps, per (gradient, spike threshold) pair.
struct FreqPoint {
    double gradient = 0.0;  // mM/s, magnitude
    double v_thresh = 0.0;  // mV
    double freq_up = 0.0;   // Hz, rising-ramp rate of the up detector
    double freq_down = 0.0; // Hz, falling-ramp rate of the down detector
};

std::vector<FreqPoint> freq_curve(const std::vector<double>& gradients,
                                  const std::vector<double>& v_thresholds,
                                  const AseParams& up, const AseParams& down,
                                  double dt, double warmup_s, double measure_s);

// Piecewise-constant concentration schedule: value c holds from time t on.
struct SchedulePoint {
    double t = 0.0;
    double c = 0.0;
};

struct AseTraceSample {
    double t = 0.0;
    double c = 0.0;
    double unbound = 0.0;
    double bound = 0.0;
    double inactive = 0.0;
    double hyper_unbound = 0.0; // 1 for the left neuron
    double hyper_bound = 0.0;   // 0 for the left neuron
    double v = 0.0;
    double threshold = 0.0;
};

// Non-spiking trace of one neuron's internal state under a schedule.
std::vector<AseTraceSample> step_response(const std::vector<SchedulePoint>& schedule,
                                          AseSide side, const AseParams& p,
                                          double duration, double dt, double record_dt);

std::vector<SchedulePoint> parse_schedule(const std::string& text); // "0:40, 20:50"

} // namespace wormnav

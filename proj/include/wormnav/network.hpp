// The 7-neuron contour-tracking network and the worm kinematics it drives.
//
// Neurons (ids used in rasters and exports):
//   1 sense_hi   LIF, driven while concentration > set-point
//   2 sense_lo   LIF, driven while concentration < set-point
//   3 grad_up    spiking gradient detector, fires on rising concentration
//   4 grad_down  spiking gradient detector, fires on falling concentration
//   5 turn_cw    LIF with negative bias; excited by 1 and 3; clockwise turn
//   6 turn_ccw   LIF with negative bias; excited by 2 and 4; anticlockwise turn
//   7 wander     LIF; excited by 1 and 2, inhibited by 3 and 4; random turn
//
// turn_cw spikes only when both of its inputs are active (moving up the
// gradient while above the set-point), turn_ccw mirrors it below the
// set-point, and wander fires when the worm is off the set-point with no
// usable gradient signal.
#pragma once

#include <array>

#include "wormnav/ase.hpp"
#include "wormnav/environment.hpp"
#include "wormnav/leif.hpp"
#include "wormnav/random.hpp"

namespace wormnav {

inline constexpr int kNumNeurons = 7;
inline constexpr int kSenseHi = 1;
inline constexpr int kSenseLo = 2;
inline constexpr int kGradUp = 3;
inline constexpr int kGradDown = 4;
inline constexpr int kTurnCw = 5;
inline constexpr int kTurnCcw = 6;
inline constexpr int kWander = 7;

struct SpikeVector {
    std::array<bool, kNumNeurons> fired{}; // index 0 -> neuron 1
    bool operator[](int neuron_id) const { return fired[neuron_id - 1]; }
    bool any() const;
};

// Neuron 3 spikes at a lower threshold than the standalone ASE default so the
// clockwise corrector keeps firing during slow climbs at the crawl speed.
inline AseParams grad_up_defaults() {
    AseParams p;
    p.v_thresh = 10.0;
    return p;
}

struct NetworkConfig {
    AseParams grad_up = grad_up_defaults(); // left-type detector (neuron 3)
    AseParams grad_down;                    // right-type detector (neuron 4)
    LeifParams sense;       // neurons 1 and 2
    LeifParams turn;        // neurons 5 and 6
    LeifParams wander;      // neuron 7
    SensorConfig sensor;

    double bias_turn_cw = -20.0;  // constant bias current, must be < 0
    double bias_turn_ccw = -15.0; // must be < 0

    // Synapse weights; excitatory entries must be > 0, inhibitory < 0.
    // Detector weights onto the turners stay small enough that a saturated
    // detector alone cannot cross threshold; the paired sensor must agree.
    double w_sense_hi_turn_cw = 5.2;
    double w_grad_up_turn_cw = 2.2;
    double w_sense_lo_turn_ccw = 5.2;
    double w_grad_down_turn_ccw = 2.2;
    double w_sense_hi_wander = 3.4;
    double w_sense_lo_wander = 3.4;
    double w_grad_up_wander = -1.0;   // inhibitory
    double w_grad_down_wander = -1.0; // inhibitory

    // Shared synapse kernel constants.
    double syn_i0 = 1.0;
    double syn_tau = 1.0;   // s
    double syn_tau_s = 0.1; // s
};

class Network {
public:
    // Validates sign constraints and wires the 8 synapses.
    // Throws std::invalid_argument on a config that violates them.
    explicit Network(const NetworkConfig& cfg);

    // Advance every neuron by one step given the sensed concentration.
    // Update order: sensors, then gradient detectors (fed the raw
    // concentration), then the logic neurons fed synaptic currents that
    // include this step's upstream spikes.
    SpikeVector step(double c, double dt);

    // Stimulation hook for logic-layer tests: neurons 1..4 are clamped to the
    // given spike pattern for this step instead of being simulated; only
    // neurons 5..7 are integrated.
    SpikeVector step_forced(const std::array<bool, 4>& source_spikes, double dt);

    const NetworkConfig& config() const { return cfg_; }
    int synapse_count() const { return static_cast<int>(synapses_.size()); }

    // State inspection (tests, traces).
    double potential(int neuron_id) const;
    const AseState& grad_up_state() const { return grad_up_; }
    const AseState& grad_down_state() const { return grad_down_; }

private:
    void propagate_sources(const std::array<bool, 4>& source_spikes, double dt);
    SpikeVector step_logic(const std::array<bool, 4>& source_spikes, double dt);

    NetworkConfig cfg_;
    AseState grad_up_;
    AseState grad_down_;
    bool primed_ = false; // detector thresholds seed from the first sample
    double v_sense_hi_ = 0.0;
    double v_sense_lo_ = 0.0;
    double v_turn_cw_ = 0.0;
    double v_turn_ccw_ = 0.0;
    double v_wander_ = 0.0;

    std::array<Synapse, 8> synapses_;
    std::array<SynapseState, 8> syn_states_;
    double cached_dt_ = -1.0;
    std::array<double, 8> decay_slow_{};
    std::array<double, 8> decay_fast_{};
};

struct MotorParams {
    double turn_step_deg = 3.33;            // deterministic turn per corrective spike
    double random_turn_halfwidth_deg = 22.5; // wander turn drawn in +/- this
    double v_fast = 0.3;  // mm/s, exploration speed
    double v_slow = 0.09; // mm/s, correction/tracking speed
};

enum class MotorMarker { None, TurnCw, TurnCcw, Wander };

struct WormState {
    double x = 0.0;       // mm
    double y = 0.0;       // mm
    double heading = 0.0; // rad, normalized to (-pi, pi]
    double speed = 0.3;   // mm/s, v_fast or v_slow
    MotorMarker last_motor = MotorMarker::None;
};

// Apply this step's motor spikes to the worm: turns (clockwise = negative
// heading change), speed from the most recent motor spike (precedence
// turn_cw > turn_ccw > wander within a step), then advance speed*dt along the
// heading with reflecting arena walls.
WormState apply_motor(const WormState& w, const SpikeVector& spikes,
                      const MotorParams& mp, RandomStream& rng, double dt,
                      const ConcentrationField& arena);

} // namespace wormnav

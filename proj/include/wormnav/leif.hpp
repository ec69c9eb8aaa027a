// Leaky integrate-and-fire neuron, difference-of-exponentials synapse
// kernel, and the set-point sensor currents.
#pragma once

#include <vector>

namespace wormnav {

struct LeifParams {
    double c_mem = 0.2;   // capacitance-like scale
    double g_leak = 1.0;  // leak conductance
    double v_rest = 0.0;  // mV
    double v_thresh = 20.0; // mV
    double v_spike = 80.0;  // mV, emitted peak
};

struct LeifStepResult {
    double v = 0.0;      // start value for the next step (v_rest after a spike)
    bool spiked = false;
};

// One Euler step of c_mem dV/dt = -g_leak (V - v_rest) + i_app + i_syn,
// with threshold/reset applied to the post-step value.
LeifStepResult step_leif(double v, double i_app, double i_syn, const LeifParams& p, double dt);

// Ordered spike times of one neuron, seconds, strictly increasing.
struct SpikeTrain {
    std::vector<double> times;
    void add(double t); // throws std::invalid_argument if not strictly increasing
};

struct Synapse {
    int source = 0;      // neuron id (1-based, see network.hpp)
    int target = 0;
    double weight = 0.0; // signed; > 0 excitatory, < 0 inhibitory
    double i0 = 1.0;     // current scale
    double tau = 1.0;    // s, slow time constant
    double tau_s = 0.1;  // s, fast time constant; tau > tau_s > 0
};

// Current at time t from all spikes at or before t:
//   sum_k i0 * w * [exp(-(t - t_k)/tau) - exp(-(t - t_k)/tau_s)]
// Kernels superpose linearly; spikes older than 10*tau are skipped (their
// contribution is below exp(-10) of the kernel scale).
double synaptic_current(double t, const SpikeTrain& train, const Synapse& syn);

// Offset after the spike at which a single kernel peaks:
//   t* = tau*tau_s/(tau - tau_s) * ln(tau/tau_s)
double synapse_kernel_peak_offset(const Synapse& syn);

// Running evaluation of the same kernel sum in O(1) per step: two decaying
// accumulators, one per exponential. With decay factors exp(-dt/tau) and
// exp(-dt/tau_s) the value equals synaptic_current() up to rounding.
class SynapseState {
public:
    void decay(double factor_slow, double factor_fast) {
        slow_ *= factor_slow;
        fast_ *= factor_fast;
    }
    void add_spike() {
        slow_ += 1.0;
        fast_ += 1.0;
    }
    double current(const Synapse& syn) const {
        return syn.i0 * syn.weight * (slow_ - fast_);
    }
    void reset() { slow_ = fast_ = 0.0; }

private:
    double slow_ = 0.0;
    double fast_ = 0.0;
};

struct SensorConfig {
    double c_track = 55.0; // mM, tracked set-point
    double i_app0 = 40.0;  // drive current when the sensor condition holds
};

enum class SensorChannel { Above, Below };

// i_app0 if the concentration is strictly on the channel's side of the
// set-point, else 0. Both channels are 0 exactly at the set-point.
double sensor_current(double c, const SensorConfig& cfg, SensorChannel channel);

} // namespace wormnav

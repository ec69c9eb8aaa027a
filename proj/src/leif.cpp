#include "wormnav/leif.hpp"

#include <cmath>
#include <stdexcept>

namespace wormnav {

LeifStepResult step_leif(double v, double i_app, double i_syn, const LeifParams& p, double dt) {
    const double dv = (-p.g_leak * (v - p.v_rest) + i_app + i_syn) / p.c_mem;
    LeifStepResult r;
    r.v = v + dt * dv;
    if (r.v >= p.v_thresh) {
        r.spiked = true;
        r.v = p.v_rest;
    }
    return r;
}

void SpikeTrain::add(double t) {
    if (!times.empty() && t <= times.back()) {
        throw std::invalid_argument("spike times must be strictly increasing");
    }
    times.push_back(t);
}

double synaptic_current(double t, const SpikeTrain& train, const Synapse& syn) {
    // Spikes older than 10 tau contribute < 5e-5 of the kernel peak; skip them.
    const double horizon = 10.0 * syn.tau;
    double sum = 0.0;
    for (auto it = train.times.rbegin(); it != train.times.rend(); ++it) {
        const double dt = t - *it;
        if (dt < 0.0) continue;
        if (dt > horizon) break;
        sum += std::exp(-dt / syn.tau) - std::exp(-dt / syn.tau_s);
    }
    return syn.i0 * syn.weight * sum;
}

double synapse_kernel_peak_offset(const Synapse& syn) {
    return syn.tau * syn.tau_s / (syn.tau - syn.tau_s) * std::log(syn.tau / syn.tau_s);
}

double sensor_current(double c, const SensorConfig& cfg, SensorChannel channel) {
    const double excess = (channel == SensorChannel::Above) ? c - cfg.c_track
                                                            : cfg.c_track - c;
    return excess > 0.0 ? cfg.i_app0 : 0.0;
}

} // namespace wormnav

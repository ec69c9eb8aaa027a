#include "wormnav/network.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace wormnav {

bool SpikeVector::any() const {
    for (bool f : fired) {
        if (f) return true;
    }
    return false;
}

namespace {

void require(bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(what);
}

} // namespace

Network::Network(const NetworkConfig& cfg) : cfg_(cfg) {
    require(cfg.bias_turn_cw < 0.0, "turn_cw bias must be negative");
    require(cfg.bias_turn_ccw < 0.0, "turn_ccw bias must be negative");
    require(cfg.w_sense_hi_turn_cw > 0.0, "sense_hi->turn_cw weight must be excitatory");
    require(cfg.w_grad_up_turn_cw > 0.0, "grad_up->turn_cw weight must be excitatory");
    require(cfg.w_sense_lo_turn_ccw > 0.0, "sense_lo->turn_ccw weight must be excitatory");
    require(cfg.w_grad_down_turn_ccw > 0.0, "grad_down->turn_ccw weight must be excitatory");
    require(cfg.w_sense_hi_wander > 0.0, "sense_hi->wander weight must be excitatory");
    require(cfg.w_sense_lo_wander > 0.0, "sense_lo->wander weight must be excitatory");
    require(cfg.w_grad_up_wander < 0.0, "grad_up->wander weight must be inhibitory");
    require(cfg.w_grad_down_wander < 0.0, "grad_down->wander weight must be inhibitory");
    require(cfg.syn_i0 > 0.0, "synapse current scale must be positive");
    require(cfg.syn_tau > cfg.syn_tau_s && cfg.syn_tau_s > 0.0,
            "synapse time constants must satisfy tau > tau_s > 0");

    grad_up_ = make_ase_state(AseSide::Left, cfg_.grad_up, 0.0);
    grad_down_ = make_ase_state(AseSide::Right, cfg_.grad_down, 0.0);

    auto wire = [&](int idx, int source, int target, double weight) {
        synapses_[idx] = Synapse{source, target, weight, cfg_.syn_i0,
                                 cfg_.syn_tau, cfg_.syn_tau_s};
    };
    wire(0, kSenseHi, kTurnCw, cfg_.w_sense_hi_turn_cw);
    wire(1, kGradUp, kTurnCw, cfg_.w_grad_up_turn_cw);
    wire(2, kSenseLo, kTurnCcw, cfg_.w_sense_lo_turn_ccw);
    wire(3, kGradDown, kTurnCcw, cfg_.w_grad_down_turn_ccw);
    wire(4, kSenseHi, kWander, cfg_.w_sense_hi_wander);
    wire(5, kSenseLo, kWander, cfg_.w_sense_lo_wander);
    wire(6, kGradUp, kWander, cfg_.w_grad_up_wander);
    wire(7, kGradDown, kWander, cfg_.w_grad_down_wander);
}

void Network::propagate_sources(const std::array<bool, 4>& source_spikes, double dt) {
    if (dt != cached_dt_) {
        for (std::size_t i = 0; i < synapses_.size(); ++i) {
            decay_slow_[i] = std::exp(-dt / synapses_[i].tau);
            decay_fast_[i] = std::exp(-dt / synapses_[i].tau_s);
        }
        cached_dt_ = dt;
    }
    for (std::size_t i = 0; i < synapses_.size(); ++i) {
        syn_states_[i].decay(decay_slow_[i], decay_fast_[i]);
        if (source_spikes[static_cast<std::size_t>(synapses_[i].source - 1)]) {
            syn_states_[i].add_spike();
        }
    }
}

SpikeVector Network::step_logic(const std::array<bool, 4>& source_spikes, double dt) {
    propagate_sources(source_spikes, dt);

    double i_turn_cw = 0.0;
    double i_turn_ccw = 0.0;
    double i_wander = 0.0;
    for (std::size_t i = 0; i < synapses_.size(); ++i) {
        const double cur = syn_states_[i].current(synapses_[i]);
        switch (synapses_[i].target) {
            case kTurnCw: i_turn_cw += cur; break;
            case kTurnCcw: i_turn_ccw += cur; break;
            default: i_wander += cur; break;
        }
    }

    const auto r_cw = step_leif(v_turn_cw_, cfg_.bias_turn_cw, i_turn_cw, cfg_.turn, dt);
    const auto r_ccw = step_leif(v_turn_ccw_, cfg_.bias_turn_ccw, i_turn_ccw, cfg_.turn, dt);
    const auto r_wander = step_leif(v_wander_, 0.0, i_wander, cfg_.wander, dt);
    v_turn_cw_ = r_cw.v;
    v_turn_ccw_ = r_ccw.v;
    v_wander_ = r_wander.v;

    SpikeVector out;
    out.fired[kSenseHi - 1] = source_spikes[0];
    out.fired[kSenseLo - 1] = source_spikes[1];
    out.fired[kGradUp - 1] = source_spikes[2];
    out.fired[kGradDown - 1] = source_spikes[3];
    out.fired[kTurnCw - 1] = r_cw.spiked;
    out.fired[kTurnCcw - 1] = r_ccw.spiked;
    out.fired[kWander - 1] = r_wander.spiked;
    return out;
}

SpikeVector Network::step(double c, double dt) {
    if (!primed_) {
        grad_up_ = make_ase_state(AseSide::Left, cfg_.grad_up, c);
        grad_down_ = make_ase_state(AseSide::Right, cfg_.grad_down, c);
        primed_ = true;
    }

    const auto r_hi = step_leif(v_sense_hi_,
                                sensor_current(c, cfg_.sensor, SensorChannel::Above),
                                0.0, cfg_.sense, dt);
    const auto r_lo = step_leif(v_sense_lo_,
                                sensor_current(c, cfg_.sensor, SensorChannel::Below),
                                0.0, cfg_.sense, dt);
    v_sense_hi_ = r_hi.v;
    v_sense_lo_ = r_lo.v;

    const auto r_up = step_ase(grad_up_, c, cfg_.grad_up, dt);
    const auto r_down = step_ase(grad_down_, c, cfg_.grad_down, dt);
    grad_up_ = r_up.state;
    grad_down_ = r_down.state;

    return step_logic({r_hi.spiked, r_lo.spiked, r_up.spiked, r_down.spiked}, dt);
}

SpikeVector Network::step_forced(const std::array<bool, 4>& source_spikes, double dt) {
    return step_logic(source_spikes, dt);
}

double Network::potential(int neuron_id) const {
    switch (neuron_id) {
        case kSenseHi: return v_sense_hi_;
        case kSenseLo: return v_sense_lo_;
        case kGradUp: return grad_up_.v;
        case kGradDown: return grad_down_.v;
        case kTurnCw: return v_turn_cw_;
        case kTurnCcw: return v_turn_ccw_;
        case kWander: return v_wander_;
        default: throw std::out_of_range("neuron id must be in 1..7");
    }
}

WormState apply_motor(const WormState& w, const SpikeVector& spikes,
                      const MotorParams& mp, RandomStream& rng, double dt,
                      const ConcentrationField& arena) {
    constexpr double kDegToRad = std::numbers::pi / 180.0;
    WormState out = w;

    if (spikes[kTurnCw]) out.heading -= mp.turn_step_deg * kDegToRad;
    if (spikes[kTurnCcw]) out.heading += mp.turn_step_deg * kDegToRad;
    if (spikes[kWander]) {
        out.heading += rng.uniform(-mp.random_turn_halfwidth_deg,
                                   mp.random_turn_halfwidth_deg) * kDegToRad;
    }

    if (spikes[kTurnCw] || spikes[kTurnCcw]) {
        out.speed = mp.v_slow;
        out.last_motor = spikes[kTurnCw] ? MotorMarker::TurnCw : MotorMarker::TurnCcw;
    } else if (spikes[kWander]) {
        out.speed = mp.v_fast;
        out.last_motor = MotorMarker::Wander;
    }

    out.heading = normalize_angle(out.heading);
    advance_with_reflection(out.x, out.y, out.heading, out.speed * dt, arena);
    return out;
}

} // namespace wormnav

// Graded-potential salt-sensing neuron pair (ASEL/ASER) and the spiking
// wrapper that turns them into temporal-gradient detectors.
//
// The left neuron depolarizes on concentration up-steps, the right neuron on
// down-steps. Each carries a pool of depolarizing ion channels with a
// three-state kinetic scheme (unbound -> bound -> inactive -> unbound); the
// right neuron additionally carries two-state hyperpolarizing channels that
// bind above a fixed concentration. Binding rates are gated by an adaptive
// concentration threshold, which is what makes the response transient and
// gradient-selective.
//
// All state transitions are explicit (forward) Euler at a fixed dt.
// Conventions: H(0) = 0, sgn(0) = 0.
#pragma once

#include <stdexcept>

namespace wormnav {

// Raised when an Euler step drives a channel fraction outside [0,1] by more
// than the guard band, i.e. dt is too large for the configured rates.
class IntegrationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class AseSide { Left, Right };

// Three-state depolarizing channel pool. Fractions sum to 1.
struct DepolChannels {
    double unbound = 1.0;
    double bound = 0.0;
    double inactive = 0.0;
};

// Two-state hyperpolarizing channel pool (right neuron only). Fractions sum to 1.
struct HyperChannels {
    double unbound = 1.0;
    double bound = 0.0;
};

struct AseParams {
    double tau_m = 0.5;      // s, membrane time constant
    double v_rest = 0.0;     // mV, resting potential
    double v_dep = 100.0;    // mV, depolarizing reversal potential
    double v_hyp = -100.0;   // mV, hyperpolarizing reversal potential
    double k_m = 10.0;       // dimensionless conductance scale

    double beta_d = 1.0;     // 1/s, depol bound -> unbound
    double gamma_d = 1.0;    // 1/s, depol bound -> inactive
    double delta_d = 0.33;   // 1/s, depol inactive -> unbound
    double beta_h = 1.0;     // 1/s, hyper bound -> unbound

    double alpha0_dep_left = 3.0;  // 1/(s*mM), binding-rate scale, left
    double alpha0_dep_right = 0.1; // 1/(s*mM), binding-rate scale, right
    double alpha0_hyp = 0.1;       // 1/s, hyper binding rate when active
    double eta_hyp = 65.0;         // mM, hyper channels bind above this concentration

    double tau_thresh_left = 2.0;   // s, left threshold adaptation
    double tau_thresh_right = 20.0; // s, right threshold adaptation
    double c_thresh_min = 1.0;      // mM, lower clamp for the right threshold

    double v_thresh = 20.5;  // mV, spike threshold (spiking wrapper only)
    double v_spike = 80.0;   // mV, emitted spike peak
};

struct AseState {
    AseSide side = AseSide::Left;
    double v = 0.0;          // mV, membrane potential
    DepolChannels depol;
    HyperChannels hyper;     // identity (all unbound) for the left neuron
    double threshold = 0.0;  // mM, adaptive concentration threshold
};

// State adapted to a constant ambient concentration c0: resting potential,
// all channels unbound, threshold equal to c0 (clamped for the right side).
AseState make_ase_state(AseSide side, const AseParams& p, double c0);

double heaviside(double x); // 1 if x > 0 else 0
double signum(double x);    // -1, 0, +1

// Depolarizing binding rate: proportional to how far the concentration has
// moved past the adaptive threshold, in the side's preferred direction.
double alpha_depol(double c, double threshold, AseSide side, double scale);

// Hyperpolarizing binding rate: constant above eta, zero otherwise.
double alpha_hyper(double c, double eta, double alpha0);

// One Euler step of the channel kinetics. The shared-rate-term form keeps the
// fraction sum conserved to rounding error.
DepolChannels step_depol(const DepolChannels& s, double alpha, const AseParams& p, double dt);
HyperChannels step_hyper(const HyperChannels& s, double alpha, const AseParams& p, double dt);

// k = k_m * bound^2
double channel_conductance(double bound, double k_m);

// One Euler step of the threshold adaptation for state.side; returns the new
// threshold (right side clamped to c_thresh_min).
double adapt_threshold(const AseState& state, double c, const AseParams& p, double dt);

// One Euler step of tau_m dV/dt = (v_rest - V) + k_d (v_dep - V) + k_h (v_hyp - V).
double step_membrane(double v, double k_d, double k_h, const AseParams& p, double dt);

// Full graded-potential update: binding rates from the current threshold,
// channel steps, conductances, threshold adaptation, membrane step.
AseState step_ase_graded(const AseState& state, double c, const AseParams& p, double dt);

struct AseStepResult {
    AseState state;  // state.v is the start value for the next step
    bool spiked = false;
    double v_emitted = 0.0; // v_spike on a spike step, otherwise state.v
};

// Graded update plus the spiking constraint: if V reaches v_thresh the neuron
// emits v_spike for this step and restarts from v_rest.
AseStepResult step_ase(const AseState& state, double c, const AseParams& p, double dt);

} // namespace wormnav

#include "wormnav/ase.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace wormnav {

namespace {

constexpr double kGuardBand = 1e-6;

// Snap floating-point drift back into [0,1]; anything past the guard band
// means the Euler step is unstable for the configured rates.
double check_fraction(double f, const char* what, double dt) {
    if (f < -kGuardBand || f > 1.0 + kGuardBand) {
        throw IntegrationError(std::string("channel fraction '") + what +
                               "' left [0,1] (value " + std::to_string(f) +
                               ", dt " + std::to_string(dt) +
                               "): dt too large for the configured rates");
    }
    return std::clamp(f, 0.0, 1.0);
}

} // namespace

double heaviside(double x) { return x > 0.0 ? 1.0 : 0.0; }

double signum(double x) {
    if (x > 0.0) return 1.0;
    if (x < 0.0) return -1.0;
    return 0.0;
}

double alpha_depol(double c, double threshold, AseSide side, double scale) {
    const double excess = (side == AseSide::Left) ? c - threshold : threshold - c;
    return scale * excess * heaviside(excess);
}

double alpha_hyper(double c, double eta, double alpha0) {
    return alpha0 * heaviside(c - eta);
}

DepolChannels step_depol(const DepolChannels& s, double alpha, const AseParams& p, double dt) {
    // Each rate term is computed once and moved between exactly two pools, so
    // the fraction sum is conserved up to rounding.
    const double bind = alpha * s.unbound * dt;        // unbound -> bound
    const double unbind = p.beta_d * s.bound * dt;     // bound -> unbound
    const double inact = p.gamma_d * s.bound * dt;     // bound -> inactive
    const double recover = p.delta_d * s.inactive * dt; // inactive -> unbound

    DepolChannels out;
    out.unbound = s.unbound - bind + unbind + recover;
    out.bound = s.bound + bind - unbind - inact;
    out.inactive = s.inactive + inact - recover;

    out.unbound = check_fraction(out.unbound, "depol.unbound", dt);
    out.bound = check_fraction(out.bound, "depol.bound", dt);
    out.inactive = check_fraction(out.inactive, "depol.inactive", dt);
    return out;
}

HyperChannels step_hyper(const HyperChannels& s, double alpha, const AseParams& p, double dt) {
    const double bind = alpha * s.unbound * dt;
    const double unbind = p.beta_h * s.bound * dt;

    HyperChannels out;
    out.unbound = s.unbound - bind + unbind;
    out.bound = s.bound + bind - unbind;

    out.unbound = check_fraction(out.unbound, "hyper.unbound", dt);
    out.bound = check_fraction(out.bound, "hyper.bound", dt);
    return out;
}

double channel_conductance(double bound, double k_m) {
    return k_m * bound * bound;
}

double adapt_threshold(const AseState& state, double c, const AseParams& p, double dt) {
    if (state.side == AseSide::Left) {
        const double dthr = (c * heaviside(c - state.threshold) - state.threshold) /
                            p.tau_thresh_left;
        return state.threshold + dt * dthr;
    }
    // Right side: relax toward c from above, grow exponentially from below,
    // hold exactly at c; then clamp so the threshold cannot decay to zero.
    const double gap = state.threshold - c;
    const double dthr = (c * heaviside(gap) - signum(gap) * state.threshold) /
                        p.tau_thresh_right;
    return std::max(state.threshold + dt * dthr, p.c_thresh_min);
}

double step_membrane(double v, double k_d, double k_h, const AseParams& p, double dt) {
    const double dv = (p.v_rest - v) + k_d * (p.v_dep - v) + k_h * (p.v_hyp - v);
    return v + dt * dv / p.tau_m;
}

AseState make_ase_state(AseSide side, const AseParams& p, double c0) {
    AseState s;
    s.side = side;
    s.v = p.v_rest;
    s.threshold = (side == AseSide::Right) ? std::max(c0, p.c_thresh_min) : c0;
    return s;
}

AseState step_ase_graded(const AseState& state, double c, const AseParams& p, double dt) {
    // All derivatives are evaluated at the current state, so update order
    // below is immaterial.
    AseState next = state;

    const double scale = (state.side == AseSide::Left) ? p.alpha0_dep_left
                                                       : p.alpha0_dep_right;
    const double a_dep = alpha_depol(c, state.threshold, state.side, scale);
    next.depol = step_depol(state.depol, a_dep, p, dt);

    double k_h = 0.0;
    if (state.side == AseSide::Right) {
        const double a_hyp = alpha_hyper(c, p.eta_hyp, p.alpha0_hyp);
        next.hyper = step_hyper(state.hyper, a_hyp, p, dt);
        k_h = channel_conductance(state.hyper.bound, p.k_m);
    }

    const double k_d = channel_conductance(state.depol.bound, p.k_m);
    next.threshold = adapt_threshold(state, c, p, dt);
    next.v = step_membrane(state.v, k_d, k_h, p, dt);
    return next;
}

AseStepResult step_ase(const AseState& state, double c, const AseParams& p, double dt) {
    AseStepResult r;
    r.state = step_ase_graded(state, c, p, dt);
    if (r.state.v >= p.v_thresh) {
        r.spiked = true;
        r.v_emitted = p.v_spike;
        r.state.v = p.v_rest;
    } else {
        r.v_emitted = r.state.v;
    }
    return r;
}

} // namespace wormnav

#include "wormnav/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cmath>
#include <numbers>
#include <sstream>
#include <thread>

#include "wormnav/random.hpp"

namespace wormnav {

LockStats lock_and_deviation(const Trajectory& traj, const ConcentrationField& field,
                             double c_track) {
    LockStats out;
    double deviation_sum = 0.0;
    long deviation_n = 0;
    for (const auto& s : traj.samples) {
        const double c_true = field.value_at(s.x, s.y);
        if (!out.lock_time) {
            if (std::abs(c_true - c_track) <= kLockBand) out.lock_time = s.t;
        } else {
            deviation_sum += std::abs(c_true - c_track);
            ++deviation_n;
        }
    }
    if (deviation_n > 0) {
        out.mean_deviation = deviation_sum / static_cast<double>(deviation_n);
    }
    return out;
}

TrialOutput run_trial(const NetworkConfig& net_cfg, const MotorParams& motor,
                      const ConcentrationField& field, const TrialSetup& setup,
                      std::uint64_t seed) {
    RandomStream rng(seed);
    Network net(net_cfg);

    WormState w;
    w.x = setup.start_x;
    w.y = setup.start_y;
    w.heading = rng.uniform(-std::numbers::pi, std::numbers::pi);
    w.speed = motor.v_fast;

    TrialOutput out;
    out.traj.record_dt = setup.record_dt;
    out.result.seed = seed;

    const auto steps = static_cast<long>(std::llround(setup.duration / setup.dt));
    if (steps <= 0) return out; // zero-duration: empty trajectory, failure
    const long record_every = std::max(1L, std::lround(setup.record_dt / setup.dt));
    out.traj.samples.reserve(static_cast<std::size_t>(steps / record_every) + 1);

    for (long i = 0; i <= steps; ++i) {
        const double t = static_cast<double>(i) * setup.dt;
        const double c = noisy_sample(field, w.x, w.y, setup.noise, rng);
        if (i % record_every == 0) {
            out.traj.samples.push_back({t, w.x, w.y, w.heading, w.speed, c});
        }
        if (i == steps) break;

        const SpikeVector spikes = net.step(c, setup.dt);
        for (int id = 1; id <= kNumNeurons; ++id) {
            if (spikes[id]) out.traj.raster.push_back({t + setup.dt, id});
        }
        w = apply_motor(w, spikes, motor, rng, setup.dt, field);
    }

    const LockStats stats = lock_and_deviation(out.traj, field, net_cfg.sensor.c_track);
    out.result.success = stats.lock_time.has_value();
    out.result.time_to_target = stats.lock_time;
    out.result.post_lock_mean_deviation = stats.mean_deviation;
    return out;
}

double BatchStats::fraction_under(double t) const {
    if (n_trials == 0) return 0.0;
    long n = 0;
    for (const auto& r : records) {
        if (r.success && r.time_to_target && *r.time_to_target <= t) ++n;
    }
    return static_cast<double>(n) / static_cast<double>(n_trials);
}

BatchStats aggregate(std::vector<TrialResult> records) {
    BatchStats out;
    out.n_trials = static_cast<int>(records.size());
    double deviation_sum = 0.0;
    long deviation_n = 0;
    for (const auto& r : records) {
        if (r.success && r.time_to_target) out.success_times.push_back(*r.time_to_target);
        if (r.post_lock_mean_deviation) {
            deviation_sum += *r.post_lock_mean_deviation;
            ++deviation_n;
        }
    }
    std::sort(out.success_times.begin(), out.success_times.end());
    if (out.n_trials > 0) {
        out.success_rate = static_cast<double>(out.success_times.size()) /
                           static_cast<double>(out.n_trials);
    }
    if (deviation_n > 0) {
        out.mean_deviation = deviation_sum / static_cast<double>(deviation_n);
    }
    out.records = std::move(records);
    return out;
}

BatchStats run_batch(WalkerKind kind, int n, std::uint64_t base_seed,
                     const Experiment& exp, int n_threads) {
    if (n_threads <= 0) {
        n_threads = static_cast<int>(std::thread::hardware_concurrency());
        if (n_threads == 0) n_threads = 1;
    }
    n_threads = std::min(n_threads, std::max(n, 1));

    std::vector<TrialResult> records(static_cast<std::size_t>(n));
    std::atomic<int> next{0};
    auto worker = [&] {
        for (;;) {
            const int i = next.fetch_add(1);
            if (i >= n) return;
            const std::uint64_t seed = base_seed + static_cast<std::uint64_t>(i);
            if (kind == WalkerKind::Snn) {
                records[static_cast<std::size_t>(i)] =
                    run_trial(exp.net, exp.motor, exp.field, exp.setup, seed).result;
            } else {
                records[static_cast<std::size_t>(i)] = run_levy_trial(
                    exp.field, exp.setup.start_x, exp.setup.start_y,
                    exp.net.sensor.c_track, exp.setup.duration, exp.setup.dt,
                    exp.levy, seed, nullptr);
            }
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(n_threads));
    for (int i = 0; i < n_threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    return aggregate(std::move(records));
}

namespace {

// Ramp start points chosen so the measurement window stays well away from
// zero concentration: rising ramps start at 40 mM; falling ramps start high
// enough to end at 10 mM after warmup + measurement.
long count_ramp_spikes(AseSide side, const AseParams& p, double gradient,
                       double c0, double dt, double warmup_s, double measure_s) {
    AseState s = make_ase_state(side, p, c0);
    const double slope = (side == AseSide::Left) ? gradient : -gradient;
    const auto warm_steps = static_cast<long>(std::llround(warmup_s / dt));
    const auto meas_steps = static_cast<long>(std::llround(measure_s / dt));
    long spikes = 0;
    for (long i = 0; i < warm_steps + meas_steps; ++i) {
        const double c = c0 + slope * static_cast<double>(i) * dt;
        const AseStepResult r = step_ase(s, c, p, dt);
        s = r.state;
        if (r.spiked && i >= warm_steps) ++spikes;
    }
    return spikes;
}

} // namespace

std::vector<FreqPoint> freq_curve(const std::vector<double>& gradients,
                                  const std::vector<double>& v_thresholds,
                                  const AseParams& up, const AseParams& down,
                                  double dt, double warmup_s, double measure_s) {
    std::vector<FreqPoint> out;
    out.reserve(gradients.size() * v_thresholds.size());
    for (const double g : gradients) {
        for (const double vt : v_thresholds) {
            AseParams p_up = up;
            p_up.v_thresh = vt;
            AseParams p_down = down;
            p_down.v_thresh = vt;

            const double c0_down = 10.0 + g * (warmup_s + measure_s);
            FreqPoint pt;
            pt.gradient = g;
            pt.v_thresh = vt;
            pt.freq_up = static_cast<double>(count_ramp_spikes(
                             AseSide::Left, p_up, g, 40.0, dt, warmup_s, measure_s)) /
                         measure_s;
            pt.freq_down = static_cast<double>(count_ramp_spikes(
                               AseSide::Right, p_down, g, c0_down, dt, warmup_s,
                               measure_s)) /
                           measure_s;
            out.push_back(pt);
        }
    }
    return out;
}

std::vector<AseTraceSample> step_response(const std::vector<SchedulePoint>& schedule,
                                          AseSide side, const AseParams& p,
                                          double duration, double dt, double record_dt) {
    if (schedule.empty()) {
        throw std::invalid_argument("schedule must have at least one point");
    }
    auto c_at = [&](double t) {
        double c = schedule.front().c;
        for (const auto& pt : schedule) {
            if (pt.t <= t) c = pt.c;
            else break;
        }
        return c;
    };

    AseState s = make_ase_state(side, p, c_at(0.0));
    const auto steps = static_cast<long>(std::llround(duration / dt));
    const long record_every = std::max(1L, std::lround(record_dt / dt));

    std::vector<AseTraceSample> trace;
    trace.reserve(static_cast<std::size_t>(steps / record_every) + 1);
    for (long i = 0; i <= steps; ++i) {
        const double t = static_cast<double>(i) * dt;
        if (i % record_every == 0) {
            trace.push_back({t, c_at(t), s.depol.unbound, s.depol.bound,
                             s.depol.inactive, s.hyper.unbound, s.hyper.bound, s.v,
                             s.threshold});
        }
        if (i == steps) break;
        s = step_ase_graded(s, c_at(t), p, dt);
    }
    return trace;
}

std::vector<SchedulePoint> parse_schedule(const std::string& text) {
    std::vector<SchedulePoint> out;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        const auto colon = item.find(':');
        if (colon == std::string::npos) {
            throw ConfigError("schedule entry needs 't:c', got: " + item);
        }
        SchedulePoint pt;
        try {
            pt.t = std::stod(item.substr(0, colon));
            pt.c = std::stod(item.substr(colon + 1));
        } catch (const std::exception&) {
            throw ConfigError("schedule entry is not numeric: " + item);
        }
        if (!out.empty() && pt.t <= out.back().t) {
            throw ConfigError("schedule times must be strictly increasing");
        }
        out.push_back(pt);
    }
    if (out.empty()) {
        throw ConfigError("schedule must have at least one 't:c' entry");
    }
    return out;
}

namespace {

std::vector<GaussianBump> parse_bumps(const std::string& text) {
    std::vector<GaussianBump> bumps;
    std::istringstream groups(text);
    std::string group;
    while (std::getline(groups, group, ';')) {
        std::istringstream in(group);
        GaussianBump b;
        if (!(in >> b.cx >> b.cy >> b.amplitude >> b.width)) {
            throw ConfigError("bump entry needs 'cx cy amplitude width', got: " + group);
        }
        std::string rest;
        if (in >> rest) {
            throw ConfigError("bump entry has trailing junk: " + group);
        }
        bumps.push_back(b);
    }
    return bumps;
}

} // namespace

Experiment Experiment::from_config(const Config& cfg) {
    AseParams ase;
    ase.tau_m = cfg.get_double("ase.tau_m_s");
    ase.v_rest = cfg.get_double("ase.v_rest_mV");
    ase.v_dep = cfg.get_double("ase.v_dep_mV");
    ase.v_hyp = cfg.get_double("ase.v_hyp_mV");
    ase.k_m = cfg.get_double("ase.k_m");
    ase.beta_d = cfg.get_double("ase.beta_d");
    ase.gamma_d = cfg.get_double("ase.gamma_d");
    ase.delta_d = cfg.get_double("ase.delta_d");
    ase.beta_h = cfg.get_double("ase.beta_h");
    ase.alpha0_dep_left = cfg.get_double("ase.alpha0_dep_left");
    ase.alpha0_dep_right = cfg.get_double("ase.alpha0_dep_right");
    ase.alpha0_hyp = cfg.get_double("ase.alpha0_hyp");
    ase.eta_hyp = cfg.get_double("ase.eta_hyp_mM");
    ase.tau_thresh_left = cfg.get_double("ase.tau_thresh_left_s");
    ase.tau_thresh_right = cfg.get_double("ase.tau_thresh_right_s");
    ase.c_thresh_min = cfg.get_double("ase.c_thresh_min_mM");
    ase.v_thresh = cfg.get_double("ase.v_thresh_mV");
    ase.v_spike = cfg.get_double("ase.v_spike_mV");

    LeifParams leif;
    leif.c_mem = cfg.get_double("leif.c_mem");
    leif.g_leak = cfg.get_double("leif.g_leak");
    leif.v_rest = cfg.get_double("leif.v_rest_mV");
    leif.v_thresh = cfg.get_double("leif.v_thresh_mV");
    leif.v_spike = cfg.get_double("leif.v_spike_mV");

    NetworkConfig net;
    net.grad_up = ase;
    net.grad_down = ase;
    if (cfg.get_string("ase.v_thresh_up_mV") != "inherit") {
        net.grad_up.v_thresh = cfg.get_double("ase.v_thresh_up_mV");
    }
    if (cfg.get_string("ase.v_thresh_down_mV") != "inherit") {
        net.grad_down.v_thresh = cfg.get_double("ase.v_thresh_down_mV");
    }
    net.sense = leif;
    net.turn = leif;
    net.wander = leif;
    net.sensor.c_track = cfg.get_double("net.c_track_mM");
    net.sensor.i_app0 = cfg.get_double("net.i_app0");
    net.bias_turn_cw = cfg.get_double("net.bias_turn_cw");
    net.bias_turn_ccw = cfg.get_double("net.bias_turn_ccw");
    net.w_sense_hi_turn_cw = cfg.get_double("net.w_sense_hi_turn_cw");
    net.w_grad_up_turn_cw = cfg.get_double("net.w_grad_up_turn_cw");
    net.w_sense_lo_turn_ccw = cfg.get_double("net.w_sense_lo_turn_ccw");
    net.w_grad_down_turn_ccw = cfg.get_double("net.w_grad_down_turn_ccw");
    net.w_sense_hi_wander = cfg.get_double("net.w_sense_hi_wander");
    net.w_sense_lo_wander = cfg.get_double("net.w_sense_lo_wander");
    net.w_grad_up_wander = cfg.get_double("net.w_grad_up_wander");
    net.w_grad_down_wander = cfg.get_double("net.w_grad_down_wander");
    net.syn_i0 = cfg.get_double("net.syn_i0");
    net.syn_tau = cfg.get_double("net.syn_tau_slow_s");
    net.syn_tau_s = cfg.get_double("net.syn_tau_fast_s");

    MotorParams motor;
    motor.turn_step_deg = cfg.get_double("motor.turn_step_deg");
    motor.random_turn_halfwidth_deg = cfg.get_double("motor.random_turn_halfwidth_deg");
    motor.v_fast = cfg.get_double("motor.v_fast_mm_s");
    motor.v_slow = cfg.get_double("motor.v_slow_mm_s");

    ConcentrationField field(cfg.get_double("env.width_mm"),
                             cfg.get_double("env.height_mm"),
                             cfg.get_double("env.baseline_mM"),
                             parse_bumps(cfg.get_string("env.bumps")),
                             cfg.get_double("env.clip_lo_mM"),
                             cfg.get_double("env.clip_hi_mM"));

    TrialSetup setup;
    setup.duration = cfg.get_double("sim.duration_s");
    setup.dt = cfg.get_double("sim.dt_s");
    setup.record_dt = cfg.get_double("sim.record_dt_s");
    setup.start_x = cfg.get_double("sim.start_x_mm");
    setup.start_y = cfg.get_double("sim.start_y_mm");
    setup.noise.enabled = cfg.get_bool("sim.noise");
    setup.noise.amplitude = cfg.get_double("sim.noise_amplitude_mM");

    LevyParams levy;
    levy.s_min = cfg.get_double("levy.s_min_mm");
    levy.s_max = cfg.get_double("levy.s_max_mm");
    levy.speed = cfg.get_double("levy.speed_mm_s");

    return Experiment{std::move(net), motor, std::move(field), setup, levy};
}

} // namespace wormnav

#include "wormnav/config.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace wormnav {

namespace {

std::string trim(const std::string& s) {
    std::size_t a = 0;
    std::size_t b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

} // namespace

Config Config::defaults() {
    Config c;
    auto& v = c.values_;

    v["sim.duration_s"] = "1500";
    v["sim.dt_s"] = "0.001";
    v["sim.record_dt_s"] = "0.1";
    v["sim.start_x_mm"] = "30";
    v["sim.start_y_mm"] = "30";
    v["sim.noise"] = "false";
    v["sim.noise_amplitude_mM"] = "12";

    v["env.width_mm"] = "100";
    v["env.height_mm"] = "100";
    v["env.baseline_mM"] = "40";
    v["env.clip_lo_mM"] = "10";
    v["env.clip_hi_mM"] = "70";
    // cx cy amplitude width, one bump per ';'
    v["env.bumps"] = "70 70 30 8; 25 70 30 8; 70 20 30 8; 50 50 -20 10; 15 55 -15 7";

    v["ase.tau_m_s"] = "0.5";
    v["ase.v_rest_mV"] = "0";
    v["ase.v_dep_mV"] = "100";
    v["ase.v_hyp_mV"] = "-100";
    v["ase.k_m"] = "10";
    v["ase.beta_d"] = "1";
    v["ase.gamma_d"] = "1";
    v["ase.delta_d"] = "0.33";
    v["ase.beta_h"] = "1";
    v["ase.alpha0_dep_left"] = "3.0";
    v["ase.alpha0_dep_right"] = "0.1";
    v["ase.alpha0_hyp"] = "0.1";
    v["ase.eta_hyp_mM"] = "65";
    v["ase.tau_thresh_left_s"] = "2";
    v["ase.tau_thresh_right_s"] = "20";
    v["ase.c_thresh_min_mM"] = "1";
    v["ase.v_thresh_mV"] = "20.5";
    // Per-detector overrides; "inherit" falls back to ase.v_thresh_mV.
    v["ase.v_thresh_up_mV"] = "10";
    v["ase.v_thresh_down_mV"] = "inherit";
    v["ase.v_spike_mV"] = "80";

    v["leif.c_mem"] = "0.2";
    v["leif.g_leak"] = "1";
    v["leif.v_rest_mV"] = "0";
    v["leif.v_thresh_mV"] = "20";
    v["leif.v_spike_mV"] = "80";

    v["net.c_track_mM"] = "55";
    v["net.i_app0"] = "40";
    v["net.bias_turn_cw"] = "-20";
    v["net.bias_turn_ccw"] = "-15";
    v["net.w_sense_hi_turn_cw"] = "5.2";
    v["net.w_grad_up_turn_cw"] = "2.2";
    v["net.w_sense_lo_turn_ccw"] = "5.2";
    v["net.w_grad_down_turn_ccw"] = "2.2";
    v["net.w_sense_hi_wander"] = "3.4";
    v["net.w_sense_lo_wander"] = "3.4";
    v["net.w_grad_up_wander"] = "-1.0";
    v["net.w_grad_down_wander"] = "-1.0";
    v["net.syn_i0"] = "1";
    v["net.syn_tau_slow_s"] = "1.0";
    v["net.syn_tau_fast_s"] = "0.1";

    v["motor.turn_step_deg"] = "3.33";
    v["motor.random_turn_halfwidth_deg"] = "22.5";
    v["motor.v_fast_mm_s"] = "0.3";
    v["motor.v_slow_mm_s"] = "0.09";

    v["levy.s_min_mm"] = "0.2649";
    v["levy.s_max_mm"] = "40";
    v["levy.speed_mm_s"] = "0.3";

    v["batch.trials"] = "200";
    v["batch.base_seed"] = "1";
    v["batch.threads"] = "0";

    v["freq.gradients_mM_s"] = "0.02 0.05 0.1 0.2 0.4 0.8 1.6";
    v["freq.thresholds_mV"] = "27 20 12";
    v["freq.warmup_s"] = "60";
    v["freq.measure_s"] = "60";

    v["stepresp.side"] = "left";
    v["stepresp.schedule"] = "0:40, 20:50, 60:40";
    v["stepresp.duration_s"] = "100";
    v["stepresp.record_dt_s"] = "0.01";

    v["export.grid_step_mm"] = "1.0";

    return c;
}

Config Config::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open config file: " + path);
    }
    Config c = defaults();
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw ConfigError(path + ":" + std::to_string(lineno) +
                              ": expected 'key = value'");
        }
        try {
            c.set(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
        } catch (const ConfigError& e) {
            throw ConfigError(path + ":" + std::to_string(lineno) + ": " + e.what());
        }
    }
    return c;
}

void Config::set(const std::string& key, const std::string& value) {
    const auto it = values_.find(key);
    if (it == values_.end()) {
        throw ConfigError("unknown config key: " + key);
    }
    it->second = value;
}

void Config::apply_assignment(const std::string& assignment) {
    const auto eq = assignment.find('=');
    if (eq == std::string::npos) {
        throw ConfigError("expected key=value, got: " + assignment);
    }
    set(trim(assignment.substr(0, eq)), trim(assignment.substr(eq + 1)));
}

bool Config::has(const std::string& key) const {
    return values_.count(key) != 0;
}

const std::string& Config::get_string(const std::string& key) const {
    const auto it = values_.find(key);
    if (it == values_.end()) {
        throw ConfigError("unknown config key: " + key);
    }
    return it->second;
}

double Config::get_double(const std::string& key) const {
    const std::string& raw = get_string(key);
    std::size_t used = 0;
    double value = 0.0;
    try {
        value = std::stod(raw, &used);
    } catch (const std::exception&) {
        throw ConfigError("config key '" + key + "' is not a number: " + raw);
    }
    if (used != raw.size()) {
        throw ConfigError("config key '" + key + "' has trailing junk: " + raw);
    }
    return value;
}

int Config::get_int(const std::string& key) const {
    const std::string& raw = get_string(key);
    std::size_t used = 0;
    int value = 0;
    try {
        value = std::stoi(raw, &used);
    } catch (const std::exception&) {
        throw ConfigError("config key '" + key + "' is not an integer: " + raw);
    }
    if (used != raw.size()) {
        throw ConfigError("config key '" + key + "' has trailing junk: " + raw);
    }
    return value;
}

bool Config::get_bool(const std::string& key) const {
    const std::string& raw = get_string(key);
    if (raw == "true" || raw == "1" || raw == "on") return true;
    if (raw == "false" || raw == "0" || raw == "off") return false;
    throw ConfigError("config key '" + key + "' is not a boolean: " + raw);
}

std::vector<double> Config::get_double_list(const std::string& key) const {
    std::string raw = get_string(key);
    for (char& ch : raw) {
        if (ch == ',' || ch == ';') ch = ' ';
    }
    std::istringstream in(raw);
    std::vector<double> out;
    std::string tok;
    while (in >> tok) {
        std::size_t used = 0;
        try {
            out.push_back(std::stod(tok, &used));
        } catch (const std::exception&) {
            used = std::string::npos;
        }
        if (used != tok.size()) {
            throw ConfigError("config key '" + key + "' has a non-numeric entry: " + tok);
        }
    }
    return out;
}

} // namespace wormnav

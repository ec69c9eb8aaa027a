#include "wormnav/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace wormnav {

namespace {

using nlohmann::json;

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    return out;
}

std::ifstream open_in(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open for reading: " + path);
    return in;
}

// Fixed decimal formatting keeps exports byte-stable across runs.
std::string fmt(double v, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
    return buf;
}

json result_to_json(const TrialResult& r) {
    json j;
    j["seed"] = r.seed;
    j["success"] = r.success;
    j["time_to_target_s"] = r.time_to_target ? json(*r.time_to_target) : json(nullptr);
    j["post_lock_mean_deviation_mM"] =
        r.post_lock_mean_deviation ? json(*r.post_lock_mean_deviation) : json(nullptr);
    return j;
}

TrialResult result_from_json(const json& j) {
    TrialResult r;
    r.seed = j.at("seed").get<std::uint64_t>();
    r.success = j.at("success").get<bool>();
    if (!j.at("time_to_target_s").is_null()) {
        r.time_to_target = j.at("time_to_target_s").get<double>();
    }
    if (!j.at("post_lock_mean_deviation_mM").is_null()) {
        r.post_lock_mean_deviation = j.at("post_lock_mean_deviation_mM").get<double>();
    }
    return r;
}

json config_to_json(const Config& cfg) {
    json j = json::object();
    for (const auto& [key, value] : cfg.entries()) j[key] = value;
    return j;
}

} // namespace

void write_trajectory_csv(const Trajectory& traj, const std::string& path) {
    auto out = open_out(path);
    out << "t_s,x_mm,y_mm,heading_rad,speed_mm_s,C_mM\n";
    for (const auto& s : traj.samples) {
        out << fmt(s.t, 3) << ',' << fmt(s.x, 6) << ',' << fmt(s.y, 6) << ','
            << fmt(s.heading, 6) << ',' << fmt(s.speed, 3) << ',' << fmt(s.c, 6)
            << '\n';
    }
}

Trajectory read_trajectory_csv(const std::string& path) {
    auto in = open_in(path);
    std::string line;
    if (!std::getline(in, line) || line != "t_s,x_mm,y_mm,heading_rad,speed_mm_s,C_mM") {
        throw std::runtime_error("bad trajectory header in " + path);
    }
    Trajectory traj;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        TrajectorySample s;
        char comma = 0;
        std::istringstream row(line);
        row >> s.t >> comma >> s.x >> comma >> s.y >> comma >> s.heading >> comma >>
            s.speed >> comma >> s.c;
        if (!row) throw std::runtime_error("bad trajectory row in " + path + ": " + line);
        traj.samples.push_back(s);
    }
    if (traj.samples.size() >= 2) {
        traj.record_dt = traj.samples[1].t - traj.samples[0].t;
    }
    return traj;
}

void write_raster_csv(const Trajectory& traj, const std::string& path) {
    auto out = open_out(path);
    out << "t_s,neuron_id\n";
    for (const auto& e : traj.raster) {
        out << fmt(e.t, 6) << ',' << e.neuron << '\n';
    }
}

void write_field_csv(const ConcentrationField& field, double grid_step,
                     const std::string& path) {
    if (grid_step <= 0.0) throw std::invalid_argument("grid step must be positive");
    auto out = open_out(path);
    out << "x_mm,y_mm,C_mM\n";
    const auto nx = static_cast<long>(std::llround(field.width() / grid_step));
    const auto ny = static_cast<long>(std::llround(field.height() / grid_step));
    for (long iy = 0; iy <= ny; ++iy) {
        for (long ix = 0; ix <= nx; ++ix) {
            const double x = static_cast<double>(ix) * grid_step;
            const double y = static_cast<double>(iy) * grid_step;
            out << fmt(x, 3) << ',' << fmt(y, 3) << ',' << fmt(field.value_at(x, y), 6)
                << '\n';
        }
    }
}

void write_stats_json(const BatchStats& stats, const Config& cfg,
                      const std::string& kind, const std::string& path) {
    json j;
    j["kind"] = kind;
    j["n_trials"] = stats.n_trials;
    j["success_rate"] = stats.success_rate;
    j["success_times_s"] = stats.success_times;
    j["mean_deviation_mM"] =
        stats.mean_deviation ? json(*stats.mean_deviation) : json(nullptr);
    j["records"] = json::array();
    for (const auto& r : stats.records) j["records"].push_back(result_to_json(r));
    j["config"] = config_to_json(cfg);
    auto out = open_out(path);
    out << j.dump(2) << '\n';
}

std::vector<TrialResult> read_records_json(const std::string& path) {
    auto in = open_in(path);
    json j;
    in >> j;
    std::vector<TrialResult> records;
    for (const auto& item : j.at("records")) records.push_back(result_from_json(item));
    return records;
}

void write_freq_curve_csv(const std::vector<FreqPoint>& points, const std::string& path) {
    auto out = open_out(path);
    out << "gradient_mM_s,v_thresh_mV,freq_up_Hz,freq_down_Hz\n";
    for (const auto& p : points) {
        out << fmt(p.gradient, 4) << ',' << fmt(p.v_thresh, 3) << ','
            << fmt(p.freq_up, 4) << ',' << fmt(p.freq_down, 4) << '\n';
    }
}

void write_step_response_csv(const std::vector<AseTraceSample>& trace,
                             const std::string& path) {
    auto out = open_out(path);
    out << "t_s,C_mM,unbound,bound,inactive,hyper_unbound,hyper_bound,v_mV,threshold_mM\n";
    for (const auto& s : trace) {
        out << fmt(s.t, 4) << ',' << fmt(s.c, 6) << ',' << fmt(s.unbound, 9) << ','
            << fmt(s.bound, 9) << ',' << fmt(s.inactive, 9) << ','
            << fmt(s.hyper_unbound, 9) << ',' << fmt(s.hyper_bound, 9) << ','
            << fmt(s.v, 6) << ',' << fmt(s.threshold, 6) << '\n';
    }
}

void write_trial_json(const TrialResult& result, const Config& cfg,
                      const std::string& path) {
    json j = result_to_json(result);
    j["config"] = config_to_json(cfg);
    auto out = open_out(path);
    out << j.dump(2) << '\n';
}

} // namespace wormnav

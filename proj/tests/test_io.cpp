#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "wormnav/io.hpp"

using namespace wormnav;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

const std::string kDir = "/tmp";

Trajectory make_traj() {
    Trajectory t;
    t.record_dt = 0.1;
    t.samples.push_back({0.0, 30.0, 30.0, 0.5, 0.3, 39.634});
    t.samples.push_back({0.1, 30.02, 30.01, 0.5, 0.3, 39.64});
    t.samples.push_back({0.2, 30.05, 30.03, -1.25, 0.09, 39.65});
    t.raster.push_back({0.05, 1});
    t.raster.push_back({0.12, 7});
    return t;
}

} // namespace

TEST_SUITE("io") {

TEST_CASE("trajectory csv round-trips through disk") {
    const std::string path = kDir + "/wormnav_test_traj.csv";
    const Trajectory t = make_traj();
    write_trajectory_csv(t, path);
    const Trajectory back = read_trajectory_csv(path);
    REQUIRE(back.samples.size() == t.samples.size());
    for (std::size_t i = 0; i < t.samples.size(); ++i) {
        CHECK(back.samples[i].t == doctest::Approx(t.samples[i].t));
        CHECK(back.samples[i].x == doctest::Approx(t.samples[i].x));
        CHECK(back.samples[i].y == doctest::Approx(t.samples[i].y));
        CHECK(back.samples[i].heading == doctest::Approx(t.samples[i].heading));
        CHECK(back.samples[i].speed == doctest::Approx(t.samples[i].speed));
        CHECK(back.samples[i].c == doctest::Approx(t.samples[i].c));
    }
    CHECK(back.record_dt == doctest::Approx(0.1));
    std::remove(path.c_str());
}

TEST_CASE("empty trajectory exports as a header-only csv") {
    const std::string path = kDir + "/wormnav_test_empty.csv";
    write_trajectory_csv(Trajectory{}, path);
    CHECK(slurp(path) == "t_s,x_mm,y_mm,heading_rad,speed_mm_s,C_mM\n");
    std::remove(path.c_str());
}

TEST_CASE("reading a csv with a foreign header fails") {
    const std::string path = kDir + "/wormnav_test_badheader.csv";
    std::ofstream(path) << "time,x,y\n0,1,2\n";
    CHECK_THROWS(read_trajectory_csv(path));
    std::remove(path.c_str());
}

TEST_CASE("raster csv lists one spike per row") {
    const std::string path = kDir + "/wormnav_test_raster.csv";
    write_raster_csv(make_traj(), path);
    const std::string body = slurp(path);
    CHECK(body == "t_s,neuron_id\n0.050000,1\n0.120000,7\n");
    std::remove(path.c_str());
}

TEST_CASE("writers are byte-deterministic") {
    const std::string p1 = kDir + "/wormnav_test_det1.csv";
    const std::string p2 = kDir + "/wormnav_test_det2.csv";
    write_trajectory_csv(make_traj(), p1);
    write_trajectory_csv(make_traj(), p2);
    CHECK(slurp(p1) == slurp(p2));
    std::remove(p1.c_str());
    std::remove(p2.c_str());
}

TEST_CASE("field csv covers the full grid") {
    const ConcentrationField f(10.0, 10.0, 40.0, {}, 10.0, 70.0);
    const std::string path = kDir + "/wormnav_test_field.csv";
    write_field_csv(f, 1.0, path);
    const std::string body = slurp(path);
    long rows = 0;
    for (char ch : body) {
        if (ch == '\n') ++rows;
    }
    CHECK(rows == 1 + 11 * 11); // header + (10/1+1)^2 grid points
    CHECK_THROWS(write_field_csv(f, 0.0, path));
    std::remove(path.c_str());
}

TEST_CASE("stats json embeds records and the resolved config") {
    std::vector<TrialResult> records(2);
    records[0] = {true, 321.5, 0.75, 11};
    records[1] = {false, std::nullopt, std::nullopt, 12};
    const BatchStats stats = aggregate(records);
    const Config cfg = Config::defaults();
    const std::string path = kDir + "/wormnav_test_stats.json";
    write_stats_json(stats, cfg, "snn", path);

    const nlohmann::json j = nlohmann::json::parse(slurp(path));
    CHECK(j.at("kind") == "snn");
    CHECK(j.at("n_trials") == 2);
    CHECK(j.at("success_rate").get<double>() == doctest::Approx(0.5));
    CHECK(j.at("records").size() == 2);
    CHECK(j.at("config").at("sim.dt_s") == "0.001");
    CHECK(j.at("records")[1].at("time_to_target_s").is_null());

    const auto back = read_records_json(path);
    REQUIRE(back.size() == 2);
    CHECK(back[0].seed == 11);
    CHECK(back[0].success);
    CHECK(back[0].time_to_target == records[0].time_to_target);
    CHECK(back[0].post_lock_mean_deviation == records[0].post_lock_mean_deviation);
    CHECK_FALSE(back[1].success);
    CHECK_FALSE(back[1].time_to_target.has_value());
    std::remove(path.c_str());
}

TEST_CASE("single-trial json carries the result and the config echo") {
    TrialResult r;
    r.success = true;
    r.time_to_target = 100.25;
    r.post_lock_mean_deviation = 0.5;
    r.seed = 77;
    const std::string path = kDir + "/wormnav_test_trial.json";
    write_trial_json(r, Config::defaults(), path);
    const nlohmann::json j = nlohmann::json::parse(slurp(path));
    CHECK(j.at("seed") == 77);
    CHECK(j.at("success") == true);
    CHECK(j.at("time_to_target_s").get<double>() == doctest::Approx(100.25));
    CHECK(j.at("config").at("net.c_track_mM") == "55");
    std::remove(path.c_str());
}

TEST_CASE("freq-curve and step-response writers emit the documented columns") {
    const std::string path = kDir + "/wormnav_test_freq.csv";
    write_freq_curve_csv({{0.2, 20.0, 4.5, 3.25}}, path);
    CHECK(slurp(path) ==
          "gradient_mM_s,v_thresh_mV,freq_up_Hz,freq_down_Hz\n"
          "0.2000,20.000,4.5000,3.2500\n");
    std::remove(path.c_str());

    const std::string path2 = kDir + "/wormnav_test_steps.csv";
    AseTraceSample s;
    s.t = 1.5;
    s.c = 42.0;
    s.unbound = 0.25;
    s.bound = 0.5;
    s.inactive = 0.25;
    s.hyper_unbound = 1.0;
    s.v = 12.125;
    s.threshold = 41.5;
    write_step_response_csv({s}, path2);
    CHECK(slurp(path2) ==
          "t_s,C_mM,unbound,bound,inactive,hyper_unbound,hyper_bound,v_mV,threshold_mM\n"
          "1.5000,42.000000,0.250000000,0.500000000,0.250000000,1.000000000,"
          "0.000000000,12.125000,41.500000\n");
    std::remove(path2.c_str());
}

} // TEST_SUITE("io")

#include <doctest.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "wormnav/levy.hpp"
#include "wormnav/random.hpp"

using namespace wormnav;

TEST_SUITE("levy") {

TEST_CASE("flight-length quantiles hit the truncation points and the median") {
    LevyParams p;
    CHECK(sample_flight_length(0.0, p) == doctest::Approx(0.2649).epsilon(1e-12));
    CHECK(sample_flight_length(1.0, p) == doctest::Approx(40.0).epsilon(1e-12));
    // Median of the truncated 1/l^2 law is the harmonic mean of the bounds.
    CHECK(sample_flight_length(0.5, p) == doctest::Approx(0.5263145).epsilon(1e-6));
    CHECK_THROWS_AS(sample_flight_length(-0.1, p), std::invalid_argument);
    CHECK_THROWS_AS(sample_flight_length(1.1, p), std::invalid_argument);
}

TEST_CASE("cdf and quantile function are inverses") {
    LevyParams p;
    CHECK(levy_cdf(p.s_min, p) == 0.0);
    CHECK(levy_cdf(p.s_max, p) == 1.0);
    for (double u : {0.01, 0.2, 0.5, 0.8, 0.99}) {
        CHECK(levy_cdf(sample_flight_length(u, p), p) == doctest::Approx(u).epsilon(1e-12));
    }
}

TEST_CASE("sampled lengths respect the bounds and peak in the lowest bin") {
    LevyParams p;
    RandomStream rng(29);
    std::array<long, 50> hist{};
    const double bin = (p.s_max - p.s_min) / 50.0;
    for (int i = 0; i < 100000; ++i) {
        const double l = sample_flight_length(rng.uniform01(), p);
        REQUIRE(l >= p.s_min);
        REQUIRE(l <= p.s_max);
        const auto idx = std::min<std::size_t>(
            static_cast<std::size_t>((l - p.s_min) / bin), 49);
        ++hist[idx];
    }
    CHECK(*std::max_element(hist.begin(), hist.end()) == hist[0]);
}

TEST_CASE("walker starting on the tracked contour succeeds immediately") {
    const ConcentrationField flat55(100.0, 100.0, 55.0, {}, 10.0, 70.0);
    LevyParams p;
    const TrialResult r =
        run_levy_trial(flat55, 30.0, 30.0, 55.0, 100.0, 1e-3, p, 42, nullptr);
    CHECK(r.success);
    REQUIRE(r.time_to_target.has_value());
    CHECK(*r.time_to_target == 0.0);
    REQUIRE(r.post_lock_mean_deviation.has_value());
    CHECK(*r.post_lock_mean_deviation == 0.0); // pinned exactly on the contour
}

TEST_CASE("walker never finds a contour that does not exist") {
    const ConcentrationField flat40(100.0, 100.0, 40.0, {}, 10.0, 70.0);
    LevyParams p;
    const TrialResult r =
        run_levy_trial(flat40, 30.0, 30.0, 55.0, 200.0, 1e-3, p, 42, nullptr);
    CHECK_FALSE(r.success);
    CHECK_FALSE(r.time_to_target.has_value());
    CHECK_FALSE(r.post_lock_mean_deviation.has_value());
}

TEST_CASE("same seed reproduces the trial, different seeds diverge") {
    const ConcentrationField f = default_arena();
    LevyParams p;
    Trajectory t1;
    Trajectory t2;
    const TrialResult a = run_levy_trial(f, 30.0, 30.0, 55.0, 300.0, 1e-3, p, 7, &t1);
    const TrialResult b = run_levy_trial(f, 30.0, 30.0, 55.0, 300.0, 1e-3, p, 7, &t2);
    CHECK(a.success == b.success);
    CHECK(a.time_to_target == b.time_to_target);
    CHECK(a.post_lock_mean_deviation == b.post_lock_mean_deviation);
    REQUIRE(t1.samples.size() == t2.samples.size());
    for (std::size_t i = 0; i < t1.samples.size(); ++i) {
        REQUIRE(t1.samples[i].x == t2.samples[i].x);
        REQUIRE(t1.samples[i].y == t2.samples[i].y);
    }

    Trajectory t3;
    run_levy_trial(f, 30.0, 30.0, 55.0, 300.0, 1e-3, p, 8, &t3);
    bool differs = false;
    for (std::size_t i = 0; i < t3.samples.size() && !differs; ++i) {
        differs = t3.samples[i].x != t1.samples[i].x;
    }
    CHECK(differs);
}

TEST_CASE("walk runs to the full duration and stays inside the arena") {
    const ConcentrationField f = default_arena();
    LevyParams p;
    Trajectory traj;
    traj.record_dt = 0.1;
    run_levy_trial(f, 30.0, 30.0, 55.0, 500.0, 1e-3, p, 99, &traj);
    REQUIRE(traj.samples.size() == 5001); // 500 s at 0.1 s spacing, inclusive
    for (const auto& s : traj.samples) {
        REQUIRE(f.contains(s.x, s.y));
    }
    CHECK(traj.samples.back().t == doctest::Approx(500.0));
}

} // TEST_SUITE("levy")

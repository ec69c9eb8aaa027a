#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "wormnav/environment.hpp"
#include "wormnav/random.hpp"

using namespace wormnav;

TEST_SUITE("environment") {

TEST_CASE("bump-free field is the baseline everywhere") {
    const ConcentrationField f(100.0, 100.0, 40.0, {}, 10.0, 70.0);
    CHECK(f.value_at(0.0, 0.0) == 40.0);
    CHECK(f.value_at(50.0, 50.0) == 40.0);
    CHECK(f.value_at(100.0, 100.0) == 40.0);
}

TEST_CASE("bump amplitude adds at its center and clips at the range") {
    const ConcentrationField mild(100.0, 100.0, 40.0, {{50.0, 50.0, 20.0, 5.0}},
                                  10.0, 70.0);
    CHECK(mild.value_at(50.0, 50.0) == doctest::Approx(60.0));

    const ConcentrationField hot(100.0, 100.0, 40.0, {{50.0, 50.0, 80.0, 5.0}},
                                 10.0, 70.0);
    CHECK(hot.value_at(50.0, 50.0) == 70.0); // upper clip

    const ConcentrationField cold(100.0, 100.0, 40.0, {{50.0, 50.0, -80.0, 5.0}},
                                  10.0, 70.0);
    CHECK(cold.value_at(50.0, 50.0) == 10.0); // lower clip
}

TEST_CASE("far tails are truncated, near tails are not") {
    const GaussianBump b{50.0, 50.0, 20.0, 2.0};
    const ConcentrationField f(100.0, 100.0, 40.0, {b}, 10.0, 70.0);
    CHECK(f.value_at(50.0 + 5.9 * b.width, 50.0) > 40.0);
    CHECK(f.value_at(50.0 + 6.1 * b.width, 50.0) == 40.0);
}

TEST_CASE("sampling outside the arena throws") {
    const ConcentrationField f(100.0, 100.0, 40.0, {}, 10.0, 70.0);
    CHECK(f.contains(0.0, 100.0));
    CHECK_FALSE(f.contains(-0.1, 50.0));
    CHECK_THROWS_AS(f.value_at(101.0, 50.0), std::out_of_range);
    CHECK_THROWS_AS(f.value_at(50.0, -1.0), std::out_of_range);
}

TEST_CASE("invalid construction is rejected") {
    CHECK_THROWS_AS(ConcentrationField(0.0, 100.0, 40.0, {}, 10.0, 70.0),
                    std::invalid_argument);
    CHECK_THROWS_AS(ConcentrationField(100.0, 100.0, 40.0, {}, 70.0, 10.0),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        ConcentrationField(100.0, 100.0, 40.0, {{50.0, 50.0, 10.0, 0.0}}, 10.0, 70.0),
        std::invalid_argument);
}

TEST_CASE("default arena stays in range and carries the 55 mM level set") {
    const ConcentrationField f = default_arena();
    CHECK(f.width() == 100.0);
    CHECK(f.height() == 100.0);
    double lo = 1e9;
    double hi = -1e9;
    bool has_level_set = false;
    for (int iy = 0; iy <= 200; ++iy) {
        for (int ix = 0; ix <= 200; ++ix) {
            const double c = f.value_at(ix * 0.5, iy * 0.5);
            lo = std::min(lo, c);
            hi = std::max(hi, c);
            if (std::abs(c - 55.0) <= 0.25) has_level_set = true;
        }
    }
    CHECK(lo >= 10.0);
    CHECK(hi <= 70.0);
    CHECK(hi > 55.5); // hills rise through the tracked contour
    CHECK(has_level_set);
    // The default start point sits in a flat region near the baseline.
    CHECK(f.value_at(30.0, 30.0) == doctest::Approx(40.0).epsilon(0.02));
}

TEST_CASE("sensor noise is bounded, zero-mean, and clipped at zero") {
    const ConcentrationField f(100.0, 100.0, 40.0, {}, 0.0, 70.0);
    RandomStream rng(3);

    NoiseModel off;
    off.enabled = false;
    CHECK(noisy_sample(f, 50.0, 50.0, off, rng) == 40.0);

    NoiseModel on;
    on.enabled = true;
    on.amplitude = 12.0;
    double sum = 0.0;
    double lo = 1e9;
    double hi = -1e9;
    for (int i = 0; i < 100000; ++i) {
        const double s = noisy_sample(f, 50.0, 50.0, on, rng);
        sum += s;
        lo = std::min(lo, s);
        hi = std::max(hi, s);
    }
    CHECK(lo >= 28.0);
    CHECK(hi <= 52.0);
    CHECK(sum / 100000.0 == doctest::Approx(40.0).epsilon(0.0025)); // +/- 0.1 mM

    // Near-zero truth: samples clip at zero instead of going negative.
    const ConcentrationField dim(100.0, 100.0, 5.0, {}, 0.0, 70.0);
    double min_clipped = 1e9;
    for (int i = 0; i < 10000; ++i) {
        min_clipped = std::min(min_clipped, noisy_sample(dim, 50.0, 50.0, on, rng));
    }
    CHECK(min_clipped >= 0.0);
    CHECK(min_clipped < 0.5); // the clip actually engages
}

TEST_CASE("angle normalization wraps into (-pi, pi]") {
    constexpr double pi = std::numbers::pi;
    CHECK(normalize_angle(0.0) == doctest::Approx(0.0));
    CHECK(normalize_angle(pi) == doctest::Approx(pi));
    CHECK(normalize_angle(-pi) == doctest::Approx(pi));
    CHECK(normalize_angle(3.0 * pi) == doctest::Approx(pi));
    CHECK(normalize_angle(2.0 * pi) == doctest::Approx(0.0));
    CHECK(normalize_angle(-0.5 * pi) == doctest::Approx(-0.5 * pi));
}

TEST_CASE("advance without wall contact is a straight move") {
    const ConcentrationField f(100.0, 100.0, 40.0, {}, 10.0, 70.0);
    double x = 50.0;
    double y = 50.0;
    double heading = std::numbers::pi / 4.0;
    advance_with_reflection(x, y, heading, std::sqrt(2.0), f);
    CHECK(x == doctest::Approx(51.0));
    CHECK(y == doctest::Approx(51.0));
    CHECK(heading == doctest::Approx(std::numbers::pi / 4.0));
}

TEST_CASE("wall contact mirrors the position and flips the heading") {
    const ConcentrationField f(100.0, 100.0, 40.0, {}, 10.0, 70.0);

    double x = 99.0;
    double y = 50.0;
    double heading = 0.0; // straight at the east wall
    advance_with_reflection(x, y, heading, 3.0, f);
    CHECK(x == doctest::Approx(98.0)); // 1 mm to the wall, 2 mm back
    CHECK(y == doctest::Approx(50.0));
    CHECK(heading == doctest::Approx(std::numbers::pi));

    x = 50.0;
    y = 1.0;
    heading = -std::numbers::pi / 2.0; // straight at the south wall
    advance_with_reflection(x, y, heading, 3.0, f);
    CHECK(x == doctest::Approx(50.0));
    CHECK(y == doctest::Approx(2.0));
    CHECK(heading == doctest::Approx(std::numbers::pi / 2.0));
}

TEST_CASE("repeated random advances stay inside the arena") {
    const ConcentrationField f = default_arena();
    RandomStream rng(17);
    double x = 30.0;
    double y = 30.0;
    double heading = 0.0;
    for (int i = 0; i < 100000; ++i) {
        heading = normalize_angle(heading + rng.uniform(-0.5, 0.5));
        advance_with_reflection(x, y, heading, 0.3, f);
        REQUIRE(f.contains(x, y));
        REQUIRE(heading > -std::numbers::pi);
        REQUIRE(heading <= std::numbers::pi);
    }
}

} // TEST_SUITE("environment")

#include "wormnav/environment.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace wormnav {

ConcentrationField::ConcentrationField(double width, double height, double baseline,
                                       std::vector<GaussianBump> bumps,
                                       double clip_lo, double clip_hi)
    : width_(width),
      height_(height),
      baseline_(baseline),
      bumps_(std::move(bumps)),
      clip_lo_(clip_lo),
      clip_hi_(clip_hi) {
    if (width_ <= 0.0 || height_ <= 0.0) {
        throw std::invalid_argument("arena dimensions must be positive");
    }
    if (clip_lo_ > clip_hi_) {
        throw std::invalid_argument("concentration clip range is inverted");
    }
    for (const auto& b : bumps_) {
        if (b.width <= 0.0) {
            throw std::invalid_argument("gaussian bump width must be positive");
        }
    }
}

bool ConcentrationField::contains(double x, double y) const {
    return x >= 0.0 && x <= width_ && y >= 0.0 && y <= height_;
}

double ConcentrationField::value_at(double x, double y) const {
    if (!contains(x, y)) {
        throw std::out_of_range("sample point outside the arena");
    }
    double c = baseline_;
    for (const auto& b : bumps_) {
        const double dx = x - b.cx;
        const double dy = y - b.cy;
        const double r2 = dx * dx + dy * dy;
        // 6 sigma out the bump is below 2e-8 of its amplitude; not worth exp().
        if (r2 > 36.0 * b.width * b.width) continue;
        c += b.amplitude * std::exp(-r2 / (2.0 * b.width * b.width));
    }
    return std::clamp(c, clip_lo_, clip_hi_);
}

double noisy_sample(const ConcentrationField& field, double x, double y,
                    const NoiseModel& noise, RandomStream& rng) {
    const double c = field.value_at(x, y);
    if (!noise.enabled) return c;
    const double jitter = rng.uniform(-noise.amplitude, noise.amplitude);
    return std::max(c + jitter, 0.0);
}

double normalize_angle(double a) {
    a = std::fmod(a + std::numbers::pi, 2.0 * std::numbers::pi);
    if (a <= 0.0) a += 2.0 * std::numbers::pi;
    return a - std::numbers::pi;
}

void advance_with_reflection(double& x, double& y, double& heading,
                             double distance, const ConcentrationField& arena) {
    x += distance * std::cos(heading);
    y += distance * std::sin(heading);
    if (x < 0.0) {
        x = -x;
        heading = normalize_angle(std::numbers::pi - heading);
    } else if (x > arena.width()) {
        x = 2.0 * arena.width() - x;
        heading = normalize_angle(std::numbers::pi - heading);
    }
    if (y < 0.0) {
        y = -y;
        heading = normalize_angle(-heading);
    } else if (y > arena.height()) {
        y = 2.0 * arena.height() - y;
        heading = normalize_angle(-heading);
    }
}

ConcentrationField default_arena() {
    std::vector<GaussianBump> bumps = {
        {70.0, 70.0, 30.0, 8.0},
        {25.0, 70.0, 30.0, 8.0},
        {70.0, 20.0, 30.0, 8.0},
        {50.0, 50.0, -20.0, 10.0},
        {15.0, 55.0, -15.0, 7.0},
    };
    return ConcentrationField(100.0, 100.0, 40.0, std::move(bumps), 10.0, 70.0);
}

} // namespace wormnav

// Bounded 2-D concentration field: a baseline plus Gaussian hills and
// valleys, clipped to a fixed range. Immutable after construction and
// freely shared across concurrent trials.
#pragma once

#include <stdexcept>
#include <vector>

#include "wormnav/random.hpp"

namespace wormnav {

struct GaussianBump {
    double cx = 0.0;        // mm
    double cy = 0.0;        // mm
    double amplitude = 0.0; // mM, positive hill or negative valley
    double width = 1.0;     // mm, standard-deviation-like
};

struct NoiseModel {
    double amplitude = 12.0; // mM, bound of the uniform sensor noise
    bool enabled = false;
};

class ConcentrationField {
public:
    ConcentrationField(double width, double height, double baseline,
                       std::vector<GaussianBump> bumps,
                       double clip_lo, double clip_hi);

    double width() const { return width_; }
    double height() const { return height_; }
    double baseline() const { return baseline_; }
    double clip_lo() const { return clip_lo_; }
    double clip_hi() const { return clip_hi_; }
    const std::vector<GaussianBump>& bumps() const { return bumps_; }

    bool contains(double x, double y) const;

    // Clipped concentration at (x, y). Throws std::out_of_range outside the arena.
    double value_at(double x, double y) const;

private:
    double width_, height_;
    double baseline_;
    std::vector<GaussianBump> bumps_;
    double clip_lo_, clip_hi_;
};

// value_at plus uniform sensor noise in [-amplitude, +amplitude], clipped to >= 0.
double noisy_sample(const ConcentrationField& field, double x, double y,
                    const NoiseModel& noise, RandomStream& rng);

double normalize_angle(double a); // wrap to (-pi, pi]

// Advance `distance` along `heading` from (x, y), mirror-reflecting at the
// arena walls; the travelled distance is preserved and the heading updated.
// Assumes distance is at most one arena side (one bounce per axis).
void advance_with_reflection(double& x, double& y, double& heading,
                             double distance, const ConcentrationField& arena);

// 100 x 100 mm arena, baseline 40 mM, three hills carrying a 55 mM level set
// and two valleys, with a flat region around the default start point (30, 30).
ConcentrationField default_arena();

} // namespace wormnav

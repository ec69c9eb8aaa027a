// CSV/JSON export and import. All writers are byte-deterministic for
// identical inputs.
#pragma once

#include <string>
#include <vector>

#include "wormnav/config.hpp"
#include "wormnav/environment.hpp"
#include "wormnav/harness.hpp"
#include "wormnav/trial.hpp"

namespace wormnav {

// Columns: t_s, x_mm, y_mm, heading_rad, speed_mm_s, C_mM
void write_trajectory_csv(const Trajectory& traj, const std::string& path);
Trajectory read_trajectory_csv(const std::string& path);

// Columns: t_s, neuron_id
void write_raster_csv(const Trajectory& traj, const std::string& path);

// Columns: x_mm, y_mm, C_mM on a regular grid.
void write_field_csv(const ConcentrationField& field, double grid_step,
                     const std::string& path);

// Batch statistics, per-trial records, and the full resolved config.
void write_stats_json(const BatchStats& stats, const Config& cfg,
                      const std::string& kind, const std::string& path);
std::vector<TrialResult> read_records_json(const std::string& path);

// Columns: gradient_mM_s, v_thresh_mV, freq_up_Hz, freq_down_Hz
void write_freq_curve_csv(const std::vector<FreqPoint>& points, const std::string& path);

// Columns: t_s, C_mM, unbound, bound, inactive, hyper_unbound, hyper_bound,
// v_mV, threshold_mM
void write_step_response_csv(const std::vector<AseTraceSample>& trace,
                             const std::string& path);

// Single-trial result as JSON (simulate subcommand).
void write_trial_json(const TrialResult& result, const Config& cfg,
                      const std::string& path);

} // namespace wormnav

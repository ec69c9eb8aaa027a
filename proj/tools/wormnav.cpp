// Command-line front end: single trials, batches, detector characterization,
// and field export. All outputs land in --out as CSV/JSON.
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "wormnav/config.hpp"
#include "wormnav/harness.hpp"
#include "wormnav/io.hpp"

namespace fs = std::filesystem;
using namespace wormnav;

namespace {

struct CommonOpts {
    std::string config_path;
    std::string out_dir = "out";
    std::vector<std::string> overrides;
    std::string format = "csv";
};

Config resolve_config(const CommonOpts& opts) {
    Config cfg = opts.config_path.empty() ? Config::defaults()
                                          : Config::load(opts.config_path);
    for (const auto& assignment : opts.overrides) {
        cfg.apply_assignment(assignment);
    }
    return cfg;
}

fs::path ensure_out_dir(const CommonOpts& opts) {
    fs::path dir(opts.out_dir);
    fs::create_directories(dir);
    return dir;
}

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--config", opts.config_path, "Config file (key = value lines)")
        ->check(CLI::ExistingFile);
    cmd->add_option("--out", opts.out_dir, "Output directory")
        ->capture_default_str();
    cmd->add_option("--set", opts.overrides, "Override a config key (key=value)")
        ->take_all();
}

void add_format(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--format", opts.format,
                    "csv writes trajectory/raster CSV plus the JSON summary, "
                    "json writes the summary only")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Spiking-network contour tracker and foraging baseline"};
    app.require_subcommand(1);

    CommonOpts opts;

    auto* simulate = app.add_subcommand("simulate", "One network trial");
    std::uint64_t seed = 1;
    bool noise = false;
    double duration = -1.0;
    double dt = -1.0;
    add_common(simulate, opts);
    add_format(simulate, opts);
    simulate->add_option("--seed", seed, "Trial seed")->capture_default_str();
    simulate->add_flag("--noise", noise, "Enable sensor noise (sim.noise=true)");
    simulate->add_option("--duration", duration, "Trial length, s (overrides config)");
    simulate->add_option("--dt", dt, "Integration step, s (overrides config)");

    auto* levy = app.add_subcommand("levy", "One Levy-walk baseline trial");
    add_common(levy, opts);
    add_format(levy, opts);
    levy->add_option("--seed", seed, "Trial seed")->capture_default_str();
    levy->add_option("--duration", duration, "Trial length, s (overrides config)");

    auto* batch = app.add_subcommand("batch", "Seeded batch of trials");
    std::string kind = "snn";
    int trials = -1;
    std::int64_t base_seed = -1;
    int threads = -1;
    add_common(batch, opts);
    batch->add_option("--kind", kind, "Walker: snn or levy")
        ->check(CLI::IsMember({"snn", "levy"}))
        ->capture_default_str();
    batch->add_option("--trials", trials, "Number of trials (overrides config)");
    batch->add_option("--base-seed", base_seed, "First seed (overrides config)");
    batch->add_option("--threads", threads, "Worker threads, 0 = auto");
    batch->add_flag("--noise", noise, "Enable sensor noise (sim.noise=true)");

    auto* stepresp = app.add_subcommand("step-response",
                                        "Graded-neuron trace under a schedule");
    add_common(stepresp, opts);

    auto* freq = app.add_subcommand("freq-curve",
                                    "Detector spike rate vs gradient and threshold");
    add_common(freq, opts);

    auto* field_export = app.add_subcommand("field-export", "Arena field on a grid");
    add_common(field_export, opts);

    CLI11_PARSE(app, argc, argv);

    try {
        Config cfg = resolve_config(opts);
        if (noise) cfg.set("sim.noise", "true");
        if (duration > 0.0) cfg.set("sim.duration_s", std::to_string(duration));
        if (dt > 0.0) cfg.set("sim.dt_s", std::to_string(dt));
        const fs::path out = ensure_out_dir(opts);

        if (simulate->parsed()) {
            const Experiment exp = Experiment::from_config(cfg);
            const TrialOutput trial =
                run_trial(exp.net, exp.motor, exp.field, exp.setup, seed);
            if (opts.format == "csv") {
                write_trajectory_csv(trial.traj, (out / "trajectory.csv").string());
                write_raster_csv(trial.traj, (out / "raster.csv").string());
            }
            write_trial_json(trial.result, cfg, (out / "trial.json").string());
            std::cout << (trial.result.success ? "success" : "no lock");
            if (trial.result.time_to_target) {
                std::cout << " at " << *trial.result.time_to_target << " s";
            }
            std::cout << '\n';
        } else if (levy->parsed()) {
            const Experiment exp = Experiment::from_config(cfg);
            Trajectory traj;
            traj.record_dt = exp.setup.record_dt;
            const TrialResult result = run_levy_trial(
                exp.field, exp.setup.start_x, exp.setup.start_y,
                exp.net.sensor.c_track, exp.setup.duration, exp.setup.dt, exp.levy,
                seed, opts.format == "csv" ? &traj : nullptr);
            if (opts.format == "csv") {
                write_trajectory_csv(traj, (out / "trajectory_levy.csv").string());
            }
            write_trial_json(result, cfg, (out / "trial_levy.json").string());
            std::cout << (result.success ? "success" : "no lock") << '\n';
        } else if (batch->parsed()) {
            const Experiment exp = Experiment::from_config(cfg);
            const int n = trials > 0 ? trials : cfg.get_int("batch.trials");
            const std::uint64_t s0 = base_seed >= 0
                                         ? static_cast<std::uint64_t>(base_seed)
                                         : static_cast<std::uint64_t>(
                                               cfg.get_int("batch.base_seed"));
            const int nt = threads >= 0 ? threads : cfg.get_int("batch.threads");
            const WalkerKind wk = (kind == "snn") ? WalkerKind::Snn : WalkerKind::Levy;
            const BatchStats stats = run_batch(wk, n, s0, exp, nt);
            write_stats_json(stats, cfg, kind,
                             (out / ("stats_" + kind + ".json")).string());
            std::cout << kind << ": " << stats.success_times.size() << '/'
                      << stats.n_trials << " trials locked";
            if (stats.mean_deviation) {
                std::cout << ", mean deviation " << *stats.mean_deviation << " mM";
            }
            std::cout << '\n';
        } else if (stepresp->parsed()) {
            const Experiment exp = Experiment::from_config(cfg);
            const std::string side_str = cfg.get_string("stepresp.side");
            if (side_str != "left" && side_str != "right") {
                throw ConfigError("stepresp.side must be left or right");
            }
            const AseSide side =
                side_str == "left" ? AseSide::Left : AseSide::Right;
            const auto schedule = parse_schedule(cfg.get_string("stepresp.schedule"));
            const auto trace = step_response(
                schedule, side, exp.net.grad_up, cfg.get_double("stepresp.duration_s"),
                exp.setup.dt, cfg.get_double("stepresp.record_dt_s"));
            write_step_response_csv(trace, (out / "step_response.csv").string());
            std::cout << trace.size() << " samples\n";
        } else if (freq->parsed()) {
            const Experiment exp = Experiment::from_config(cfg);
            const auto points = freq_curve(cfg.get_double_list("freq.gradients_mM_s"),
                                           cfg.get_double_list("freq.thresholds_mV"),
                                           exp.net.grad_up, exp.net.grad_down,
                                           exp.setup.dt, cfg.get_double("freq.warmup_s"),
                                           cfg.get_double("freq.measure_s"));
            write_freq_curve_csv(points, (out / "freq_curve.csv").string());
            std::cout << points.size() << " points\n";
        } else if (field_export->parsed()) {
            const Experiment exp = Experiment::from_config(cfg);
            write_field_csv(exp.field, cfg.get_double("export.grid_step_mm"),
                            (out / "field.csv").string());
            std::cout << "field written\n";
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

#pragma once

// Analyses behind each CLI subcommand. Each builds an output Table from a
// validated RunConfig; file handling and exit codes live in app.hpp.

#include "memdrift/io/config.hpp"
#include "memdrift/io/table.hpp"
#include "memdrift/memdrift.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

namespace memdrift::cli {

using io::Cell;
using io::RunConfig;
using io::Table;

inline std::vector<std::pair<std::string, std::string>> config_metadata(const RunConfig& cfg) {
    using io::format_number;
    const auto& p = cfg.device;
    return {
        {"model", io::model_spec(cfg.model)},
        {"r_on_ohm", format_number(p.r_on)},
        {"r_off_ohm", format_number(p.r_off)},
        {"thickness_d_m", format_number(p.thickness_d)},
        {"mobility_v_m2_per_Vs", format_number(p.mobility_v)},
        {"drive", drive_kind_name(cfg.drive.kind)},
        {"amplitude", format_number(cfg.drive.amplitude)},
        {"frequency_Hz", format_number(cfg.drive.frequency)},
        {"window", window_name(cfg.window.kind) + (cfg.window.kind == WindowKind::None
                                                       ? ""
                                                       : ":" + std::to_string(cfg.window.p))},
        {"integrator", integrator_name(cfg.integrator)},
        {"dt_s", format_number(cfg.dt)},
        {"w0_m", format_number(cfg.w0)},
    };
}

inline SimulationTrace run_simulation(const RunConfig& cfg) {
    return simulate(cfg.device, cfg.model, cfg.window, cfg.drive, cfg.duration, cfg.dt,
                    cfg.integrator, cfg.w0);
}

inline Table trace_table(const RunConfig& cfg, const SimulationTrace& trace) {
    Table table;
    table.metadata = config_metadata(cfg);
    table.metadata.emplace_back("duration_s", io::format_number(cfg.duration));
    table.metadata.emplace_back("saturated_steps", std::to_string(trace.saturated_steps));
    table.columns = {"t_s", "v_V", "i_A", "w_m", "r_ohm", "q_C"};
    table.rows.reserve(trace.samples.size());
    for (const auto& s : trace.samples) table.rows.push_back({s.t, s.v, s.i, s.w, s.r, s.q});
    return table;
}

inline Table simulate_command(const RunConfig& cfg) { return trace_table(cfg, run_simulation(cfg)); }

/// Magnitude of the current used for speed comparisons when none is given:
/// the drive amplitude for current drives, amplitude / R_off (current through
/// an undoped device) for voltage drives.
inline double default_reference_current(const RunConfig& cfg) {
    double peak = std::abs(cfg.drive.amplitude);
    if (is_piecewise(cfg.drive.kind)) {
        peak = 0.0;
        for (const auto& bp : cfg.drive.breakpoints) peak = std::max(peak, std::abs(bp.value));
    }
    return is_voltage_drive(cfg.drive.kind) ? peak / cfg.device.r_off : peak;
}

struct ComparisonRow {
    FieldModel model;
    double speed_min;
    double speed_max;
    std::optional<double> charge;  ///< empty for models without a closed form
    double final_r;
};

inline std::vector<ComparisonRow> compare_models(const RunConfig& cfg,
                                                 const std::vector<FieldModel>& models,
                                                 double current) {
    std::vector<ComparisonRow> rows;
    for (const auto& model : models) {
        validate_model(model, cfg.device);
        ComparisonRow row{model, 0.0, 0.0, std::nullopt, 0.0};
        if (std::holds_alternative<models::Uniform>(model)) {
            const double at_on = boundary_speed(cfg.device, model, current, cfg.device.thickness_d);
            const double at_off = boundary_speed(cfg.device, model, current, 0.0);
            row.speed_min = std::min(at_on, at_off);
            row.speed_max = std::max(at_on, at_off);
        } else {
            row.speed_min = row.speed_max = boundary_speed(cfg.device, model, current, 0.0);
        }
        if (!std::holds_alternative<models::Sigmoid>(model))
            row.charge = charge_to_switch(cfg.device, model);
        RunConfig run = cfg;
        run.model = model;
        row.final_r = run_simulation(run).samples.back().r;
        rows.push_back(row);
    }
    return rows;
}

/// Per-model boundary speed, switching charge and final resistance, with ratio
/// columns normalized to the approx-on model.
inline Table compare_command(const RunConfig& cfg, const std::vector<FieldModel>& models,
                             std::optional<double> reference_current = std::nullopt) {
    if (models.size() < 2)
        throw ParameterError("models", "compare needs at least two models");
    const double current = reference_current.value_or(default_reference_current(cfg));
    if (!std::isfinite(current) || current == 0.0)
        throw ParameterError("current", "reference current must be finite and non-zero");

    const auto reference = compare_models(cfg, {models::ApproxOn{}}, current).front();
    const auto rows = compare_models(cfg, models, current);

    Table table;
    table.metadata = config_metadata(cfg);
    table.metadata.emplace_back("reference_current_A", io::format_number(current));
    table.columns = {"model",           "speed_min_m_per_s", "speed_max_m_per_s",
                     "speed_ratio_min", "speed_ratio_max",   "charge_to_switch_C",
                     "charge_ratio",    "final_r_ohm",       "final_r_ratio"};
    for (const auto& r : rows) {
        Cell charge, charge_ratio;
        if (r.charge) {
            charge = *r.charge;
            charge_ratio = *r.charge / *reference.charge;
        }
        table.rows.push_back({io::model_spec(r.model), r.speed_min, r.speed_max,
                              r.speed_min / reference.speed_min, r.speed_max / reference.speed_max,
                              charge, charge_ratio, r.final_r, r.final_r / reference.final_r});
    }
    return table;
}

/// Field profile on a uniform grid. With a non-empty half-width ladder and a
/// sigmoid model, one block per half-width is emitted with a leading
/// half_width_m column.
inline Table field_profile_command(const RunConfig& cfg, double w, std::size_t samples,
                                   const std::vector<double>& ladder = {}) {
    const double current = default_reference_current(cfg);
    Table table;
    const bool sweep = !ladder.empty();
    if (sweep && !std::holds_alternative<models::Sigmoid>(cfg.model))
        throw ParameterError("ladder", "half-width ladder needs a sigmoid model");
    table.metadata = config_metadata(cfg);
    table.metadata.emplace_back("w_m", io::format_number(w));
    table.metadata.emplace_back("current_A", io::format_number(current));
    if (sweep) {
        table.columns = {"half_width_m", "x_m", "field_V_per_m"};
        for (double t : ladder) {
            const auto profile = field_profile(cfg.device, models::Sigmoid{t}, w, current, samples);
            for (const auto& s : profile.samples) table.rows.push_back({t, s.x, s.field});
        }
    } else {
        table.columns = {"x_m", "field_V_per_m"};
        const auto profile = field_profile(cfg.device, cfg.model, w, current, samples);
        for (const auto& s : profile.samples) table.rows.push_back({s.x, s.field});
    }
    return table;
}

inline Table charge_command(const RunConfig& cfg, const std::vector<FieldModel>& models) {
    const auto& list = models.empty() ? std::vector<FieldModel>{cfg.model} : models;
    const double reference = charge_to_switch(cfg.device, models::ApproxOn{});
    Table table;
    table.metadata = config_metadata(cfg);
    table.columns = {"model", "charge_to_switch_C", "charge_ratio"};
    for (const auto& model : list) {
        validate_model(model, cfg.device);
        const double q = charge_to_switch(cfg.device, model);
        table.rows.push_back({io::model_spec(model), q, q / reference});
    }
    return table;
}

inline Table frequency_sweep_command(const RunConfig& cfg, const std::vector<double>& frequencies,
                                     SweepOptions options = {}) {
    if (frequencies.empty())
        throw ParameterError("freqs", "frequency list is empty");
    options.integrator = cfg.integrator;
    options.w0 = cfg.w0;
    const auto points =
        frequency_sweep(cfg.device, cfg.model, cfg.window, cfg.drive, frequencies, options);
    Table table;
    table.metadata = config_metadata(cfg);
    table.metadata.emplace_back("periods", std::to_string(options.periods));
    table.metadata.emplace_back("steps_per_period", std::to_string(options.steps_per_period));
    table.columns = {"freq_Hz", "area"};
    for (const auto& pt : points) table.rows.push_back({pt.frequency, pt.area});
    return table;
}

} // namespace memdrift::cli

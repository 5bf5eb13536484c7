#pragma once

// Command-line front end:
//   memdrift <subcommand> --config <path> [--out <path>] [--format csv|json] ...
// Exit codes: 0 success, 1 validation/parse error, 2 runtime/IO error.

#include "memdrift/cli/commands.hpp"

#include <CLI11.hpp>

#include <unistd.h>

#include <chrono>
#include <ctime>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace memdrift::cli {

enum ExitCode : int { kSuccess = 0, kValidationError = 1, kRuntimeError = 2 };

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open config '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open output '" + path + "' for writing");
    out << content;
    out.flush();
    if (!out) throw IoError("failed writing '" + path + "'");
}

inline std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> items;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ','))
        if (!item.empty()) items.push_back(item);
    return items;
}

inline std::vector<double> parse_list(const std::string& text, io::Dimension dim,
                                      const std::string& field) {
    std::vector<double> values;
    for (const auto& item : split_list(text)) {
        try {
            values.push_back(io::parse_quantity(item, dim));
        } catch (const std::invalid_argument& e) {
            throw io::ConfigError(field, e.what());
        }
    }
    return values;
}

inline std::string sidecar_json(const std::string& subcommand) {
    const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm utc{};
    gmtime_r(&now, &utc);
    char stamp[32];
    std::strftime(stamp, sizeof stamp, "%Y-%m-%dT%H:%M:%SZ", &utc);
    char host[256] = {};
    if (gethostname(host, sizeof host - 1) != 0) host[0] = '\0';
    nlohmann::ordered_json doc{{"subcommand", subcommand}, {"generated_at", stamp}, {"host", host}};
    return doc.dump(2) + "\n";
}

} // namespace detail

struct CommonOptions {
    std::string config_path;
    std::string out_path;
    std::string format;
    bool sidecar = false;
};

/// Parses argv and runs one subcommand. Output goes to the --out file, the
/// config's output_path, or `out` when neither is set.
inline int run(int argc, const char* const* argv, std::ostream& out = std::cout,
               std::ostream& err = std::cerr) {
    CLI::App app{"Memristor boundary-drift field models: simulation and analysis"};
    app.require_subcommand(1);

    CommonOptions common;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", common.config_path, "JSON run configuration")->required();
        sub->add_option("--out", common.out_path, "output file (default: config output_path or stdout)");
        sub->add_option("--format", common.format, "csv or json")
            ->check(CLI::IsMember({"csv", "json"}));
        sub->add_flag("--metadata-sidecar", common.sidecar,
                      "also write <out>.meta.json with timestamp and host");
    };

    auto* simulate_cmd = app.add_subcommand("simulate", "time-domain simulation trace");
    add_common(simulate_cmd);

    std::string models_text;
    double current = 0.0;
    auto* compare_cmd = app.add_subcommand("compare", "compare field models side by side");
    add_common(compare_cmd);
    compare_cmd->add_option("--models", models_text, "comma-separated model specs")->required();
    auto* current_opt = compare_cmd->add_option("--current", current, "reference current [A]");

    double w = 0.0;
    std::size_t samples = 101;
    std::string ladder_text;
    auto* profile_cmd = app.add_subcommand("field-profile", "field along the device");
    add_common(profile_cmd);
    auto* w_opt = profile_cmd->add_option("--w", w, "boundary position [m] (default D/2)");
    profile_cmd->add_option("--samples", samples, "grid points (>= 2)");
    profile_cmd->add_option("--ladder", ladder_text, "comma-separated sigmoid half-widths");

    std::string charge_models;
    auto* charge_cmd = app.add_subcommand("charge", "charge needed to switch the device");
    add_common(charge_cmd);
    charge_cmd->add_option("--models", charge_models, "comma-separated model specs");

    std::string freqs_text;
    SweepOptions sweep;
    auto* sweep_cmd = app.add_subcommand("freq-sweep", "loop area versus drive frequency");
    add_common(sweep_cmd);
    sweep_cmd->add_option("--freqs", freqs_text, "comma-separated frequencies [Hz]")->required();
    sweep_cmd->add_option("--periods", sweep.periods, "periods simulated per frequency");
    sweep_cmd->add_option("--steps-per-period", sweep.steps_per_period, "time steps per period");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kValidationError;
    }

    try {
        std::vector<std::string> diagnostics;
        const auto cfg = io::parse_config(detail::read_file(common.config_path), &diagnostics);
        for (const auto& d : diagnostics) err << "warning: " << d << '\n';

        io::OutputFormat format = cfg.output_format;
        if (!common.format.empty())
            format = common.format == "json" ? io::OutputFormat::Json : io::OutputFormat::Csv;
        const std::string out_path = common.out_path.empty() ? cfg.output_path : common.out_path;
        if (common.sidecar && out_path.empty())
            throw io::ConfigError("metadata-sidecar", "needs an output file");

        auto parse_models = [](const std::string& text) {
            std::vector<FieldModel> list;
            for (const auto& spec : detail::split_list(text)) list.push_back(io::parse_model_spec(spec));
            return list;
        };

        Table table;
        std::string subcommand;
        if (*simulate_cmd) {
            subcommand = "simulate";
            table = simulate_command(cfg);
        } else if (*compare_cmd) {
            subcommand = "compare";
            std::optional<double> ref;
            if (*current_opt) ref = current;
            table = compare_command(cfg, parse_models(models_text), ref);
        } else if (*profile_cmd) {
            subcommand = "field-profile";
            const double at = *w_opt ? w : 0.5 * cfg.device.thickness_d;
            table = field_profile_command(
                cfg, at, samples, detail::parse_list(ladder_text, io::Dimension::Length, "ladder"));
        } else if (*charge_cmd) {
            subcommand = "charge";
            table = charge_command(cfg, parse_models(charge_models));
        } else {
            subcommand = "freq-sweep";
            const auto freqs = detail::parse_list(freqs_text, io::Dimension::Frequency, "freqs");
            if (freqs.empty()) throw io::ConfigError("freqs", "frequency list is empty");
            table = frequency_sweep_command(cfg, freqs, sweep);
        }

        std::ostringstream rendered;
        write_table(rendered, table, format);
        if (out_path.empty()) {
            out << rendered.str();
        } else {
            detail::write_file(out_path, rendered.str());
            if (common.sidecar) detail::write_file(out_path + ".meta.json", detail::sidecar_json(subcommand));
        }
        return kSuccess;
    } catch (const std::logic_error& e) {
        // ConfigError, ParameterError, DomainError and other argument problems
        err << "error: " << e.what() << '\n';
        return kValidationError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kRuntimeError;
    }
}

} // namespace memdrift::cli

#pragma once

// JSON run configuration. Quantities may be bare SI numbers or strings with a
// unit suffix ("10 nm", "1e-10 cm2/Vs", "50 Hz"); everything is normalized to SI
// here so the model layer never sees units. Unknown keys are rejected.

#include "memdrift/io/table.hpp"
#include "memdrift/io/units.hpp"
#include "memdrift/memdrift.hpp"

#include <json.hpp>

#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace memdrift::io {

/// Configuration error; what() is prefixed with the offending field path or
/// with the line/column of a JSON syntax error.
class ConfigError : public std::invalid_argument {
public:
    ConfigError(std::string field, const std::string& message)
        : std::invalid_argument(field.empty() ? message : field + ": " + message),
          field_(std::move(field)) {}
    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

struct RunConfig {
    DeviceParams device;
    FieldModel model = models::ApproxOn{};
    WindowSpec window;
    DriveWaveform drive;
    double duration = 1.0;
    double dt = 1e-3;
    Integrator integrator = Integrator::Rk4;
    double w0 = 0.0;
    std::string output_path;
    OutputFormat output_format = OutputFormat::Csv;

    bool operator==(const RunConfig&) const = default;
};

namespace detail {

using nlohmann::json;

inline void reject_unknown(const json& obj, std::string_view where,
                           std::initializer_list<std::string_view> allowed) {
    for (const auto& [key, _] : obj.items()) {
        bool ok = false;
        for (auto a : allowed) ok = ok || key == a;
        if (!ok)
            throw ConfigError(where.empty() ? key : std::string(where) + "." + key, "unknown key");
    }
}

inline double quantity(const json& value, const std::string& field, Dimension dim) {
    try {
        if (value.is_number()) return value.get<double>();
        if (value.is_string()) return parse_quantity(value.get<std::string>(), dim);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(field, e.what());
    }
    throw ConfigError(field, "expected a number or a unit-suffixed string");
}

inline const json& required(const json& obj, const std::string& where, const char* key) {
    if (!obj.contains(key))
        throw ConfigError(where.empty() ? key : where + "." + key, "missing required key");
    return obj.at(key);
}

inline std::string text(const json& value, const std::string& field) {
    if (!value.is_string()) throw ConfigError(field, "expected a string");
    return value.get<std::string>();
}

inline FieldModel model_from_name(std::string_view name, const std::string& field) {
    if (name == "uniform") return models::Uniform{};
    if (name == "approx-on") return models::ApproxOn{};
    if (name == "approx-off") return models::ApproxOff{};
    if (name == "approx-midpoint") return models::ApproxMidpoint{};
    if (name == "sigmoid") return models::Sigmoid{};
    throw ConfigError(field, "unknown field model '" + std::string(name) + "'");
}

inline FieldModel parse_model(const json& value, const std::string& field) {
    if (value.is_string()) {
        auto model = model_from_name(value.get<std::string>(), field);
        if (std::holds_alternative<models::Sigmoid>(model))
            throw ConfigError(field, "sigmoid model needs a half_width; use an object");
        return model;
    }
    if (!value.is_object()) throw ConfigError(field, "expected a model name or object");
    FieldModel model = model_from_name(text(required(value, field, "type"), field + ".type"), field);
    if (auto* mid = std::get_if<models::ApproxMidpoint>(&model)) {
        reject_unknown(value, field, {"type", "alpha", "beta"});
        if (value.contains("alpha"))
            mid->alpha = quantity(value.at("alpha"), field + ".alpha", Dimension::Dimensionless);
        if (value.contains("beta"))
            mid->beta = quantity(value.at("beta"), field + ".beta", Dimension::Dimensionless);
    } else if (auto* sig = std::get_if<models::Sigmoid>(&model)) {
        reject_unknown(value, field, {"type", "half_width"});
        sig->half_width = quantity(required(value, field, "half_width"), field + ".half_width",
                                   Dimension::Length);
    } else {
        reject_unknown(value, field, {"type"});
    }
    return model;
}

inline DriveKind drive_kind(std::string_view name, const std::string& field) {
    for (auto kind : {DriveKind::SineVoltage, DriveKind::SineCurrent, DriveKind::ConstantVoltage,
                      DriveKind::ConstantCurrent, DriveKind::PiecewiseLinearVoltage,
                      DriveKind::PiecewiseLinearCurrent})
        if (drive_kind_name(kind) == name) return kind;
    throw ConfigError(field, "unknown drive type '" + std::string(name) + "'");
}

inline DriveWaveform parse_drive(const json& value) {
    if (!value.is_object()) throw ConfigError("drive", "expected an object");
    reject_unknown(value, "drive", {"type", "amplitude", "frequency", "phase", "breakpoints"});
    DriveWaveform d;
    d.kind = drive_kind(text(required(value, "drive", "type"), "drive.type"), "drive.type");
    const Dimension amp = is_voltage_drive(d.kind) ? Dimension::Voltage : Dimension::Current;
    if (is_piecewise(d.kind)) {
        d.amplitude = 0.0;
        const auto& bps = required(value, "drive", "breakpoints");
        if (!bps.is_array()) throw ConfigError("drive.breakpoints", "expected an array of [t, value]");
        for (std::size_t k = 0; k < bps.size(); ++k) {
            const std::string f = "drive.breakpoints[" + std::to_string(k) + "]";
            if (!bps[k].is_array() || bps[k].size() != 2)
                throw ConfigError(f, "expected [t, value]");
            d.breakpoints.push_back(
                {quantity(bps[k][0], f, Dimension::Time), quantity(bps[k][1], f, amp)});
        }
        if (value.contains("amplitude") || value.contains("frequency") || value.contains("phase"))
            throw ConfigError("drive", "piecewise-linear drive takes only breakpoints");
    } else {
        d.amplitude = quantity(required(value, "drive", "amplitude"), "drive.amplitude", amp);
        if (value.contains("breakpoints"))
            throw ConfigError("drive.breakpoints", "only valid for piecewise-linear drives");
        if (is_periodic(d.kind)) {
            d.frequency = quantity(required(value, "drive", "frequency"), "drive.frequency",
                                   Dimension::Frequency);
            if (value.contains("phase"))
                d.phase = quantity(value.at("phase"), "drive.phase", Dimension::Angle);
        } else if (value.contains("frequency") || value.contains("phase")) {
            throw ConfigError("drive", "frequency/phase only valid for sine drives");
        }
    }
    try {
        validate_drive(d);
    } catch (const ParameterError& e) {
        throw ConfigError("drive." + e.parameter(), e.what());
    }
    return d;
}

inline WindowSpec parse_window(const json& value) {
    WindowSpec w;
    auto kind_of = [](std::string_view name) {
        for (auto k : {WindowKind::None, WindowKind::Joglekar, WindowKind::Biolek})
            if (window_name(k) == name) return k;
        throw ConfigError("window.type", "unknown window '" + std::string(name) + "'");
    };
    if (value.is_string()) {
        w.kind = kind_of(value.get<std::string>());
        return w;
    }
    if (!value.is_object()) throw ConfigError("window", "expected a window name or object");
    reject_unknown(value, "window", {"type", "p"});
    w.kind = kind_of(text(required(value, "window", "type"), "window.type"));
    if (value.contains("p")) {
        if (!value.at("p").is_number_integer())
            throw ConfigError("window.p", "expected a positive integer");
        w.p = value.at("p").get<int>();
    }
    if (w.p < 1) throw ConfigError("window.p", "expected a positive integer");
    return w;
}

inline std::string locate(std::string_view text, std::size_t byte) {
    std::size_t line = 1, col = 1;
    for (std::size_t k = 0; k + 1 < byte && k < text.size(); ++k) {
        if (text[k] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

} // namespace detail

/// Parses and fully validates a run configuration. Diagnostics from parameter
/// validation (non-fatal) are appended to `diagnostics` when given.
inline RunConfig parse_config(std::string_view text, std::vector<std::string>* diagnostics = nullptr) {
    using detail::json;
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw ConfigError("", "JSON syntax error at " + detail::locate(text, e.byte));
    }
    if (!doc.is_object()) throw ConfigError("", "config must be a JSON object");
    detail::reject_unknown(doc, "", {"device", "model", "window", "drive", "duration", "dt",
                                     "integrator", "w0", "output_path", "output_format"});

    RunConfig cfg;
    const auto& dev = detail::required(doc, "", "device");
    if (!dev.is_object()) throw ConfigError("device", "expected an object");
    detail::reject_unknown(dev, "device", {"r_on", "r_off", "thickness_d", "mobility_v", "mobility_e",
                                           "assumption3_enforced", "assumption3_threshold"});
    auto& p = cfg.device;
    p.r_on = detail::quantity(detail::required(dev, "device", "r_on"), "device.r_on", Dimension::Resistance);
    p.r_off = detail::quantity(detail::required(dev, "device", "r_off"), "device.r_off", Dimension::Resistance);
    p.thickness_d = detail::quantity(detail::required(dev, "device", "thickness_d"),
                                     "device.thickness_d", Dimension::Length);
    p.mobility_v = detail::quantity(detail::required(dev, "device", "mobility_v"),
                                    "device.mobility_v", Dimension::Mobility);
    if (dev.contains("mobility_e"))
        p.mobility_e = detail::quantity(dev.at("mobility_e"), "device.mobility_e", Dimension::Mobility);
    if (dev.contains("assumption3_enforced")) {
        if (!dev.at("assumption3_enforced").is_boolean())
            throw ConfigError("device.assumption3_enforced", "expected a boolean");
        p.assumption3_enforced = dev.at("assumption3_enforced").get<bool>();
    }
    if (dev.contains("assumption3_threshold"))
        p.assumption3_threshold = detail::quantity(dev.at("assumption3_threshold"),
                                                   "device.assumption3_threshold",
                                                   Dimension::Dimensionless);
    try {
        auto v = validate_params(p);
        if (diagnostics)
            diagnostics->insert(diagnostics->end(), v.diagnostics.begin(), v.diagnostics.end());
    } catch (const ParameterError& e) {
        throw ConfigError("device." + e.parameter(), e.what());
    }

    cfg.model = detail::parse_model(detail::required(doc, "", "model"), "model");
    try {
        auto notes = validate_model(cfg.model, p);
        if (diagnostics) diagnostics->insert(diagnostics->end(), notes.begin(), notes.end());
    } catch (const ParameterError& e) {
        throw ConfigError("model." + e.parameter(), e.what());
    }

    if (doc.contains("window")) cfg.window = detail::parse_window(doc.at("window"));
    cfg.drive = detail::parse_drive(detail::required(doc, "", "drive"));

    cfg.duration = detail::quantity(detail::required(doc, "", "duration"), "duration", Dimension::Time);
    cfg.dt = detail::quantity(detail::required(doc, "", "dt"), "dt", Dimension::Time);
    if (!std::isfinite(cfg.duration) || cfg.duration <= 0.0)
        throw ConfigError("duration", "must be positive");
    if (!std::isfinite(cfg.dt) || cfg.dt <= 0.0) throw ConfigError("dt", "must be positive");
    if (cfg.dt >= cfg.duration) throw ConfigError("dt", "must be smaller than duration");

    if (doc.contains("integrator")) {
        const auto name = detail::text(doc.at("integrator"), "integrator");
        if (name == "rk4") cfg.integrator = Integrator::Rk4;
        else if (name == "euler") cfg.integrator = Integrator::Euler;
        else throw ConfigError("integrator", "expected 'rk4' or 'euler'");
    }
    if (doc.contains("w0")) {
        cfg.w0 = detail::quantity(doc.at("w0"), "w0", Dimension::Length);
        if (!(cfg.w0 >= 0.0 && cfg.w0 <= p.thickness_d))
            throw ConfigError("w0", "must lie in [0, thickness_d]");
    }
    if (doc.contains("output_path")) cfg.output_path = detail::text(doc.at("output_path"), "output_path");
    if (doc.contains("output_format")) {
        const auto name = detail::text(doc.at("output_format"), "output_format");
        if (name == "csv") cfg.output_format = OutputFormat::Csv;
        else if (name == "json") cfg.output_format = OutputFormat::Json;
        else throw ConfigError("output_format", "expected 'csv' or 'json'");
    }
    return cfg;
}

inline nlohmann::ordered_json model_to_json(const FieldModel& model) {
    nlohmann::ordered_json j;
    j["type"] = model_name(model);
    if (const auto* mid = std::get_if<models::ApproxMidpoint>(&model)) {
        j["alpha"] = mid->alpha;
        j["beta"] = mid->beta;
    } else if (const auto* sig = std::get_if<models::Sigmoid>(&model)) {
        j["half_width"] = sig->half_width;
    }
    return j;
}

/// SI-valued JSON document that parse_config reads back to an equal RunConfig.
inline std::string serialize_config(const RunConfig& cfg) {
    nlohmann::ordered_json doc;
    const auto& p = cfg.device;
    doc["device"] = {{"r_on", p.r_on},
                     {"r_off", p.r_off},
                     {"thickness_d", p.thickness_d},
                     {"mobility_v", p.mobility_v},
                     {"mobility_e", p.mobility_e},
                     {"assumption3_enforced", p.assumption3_enforced},
                     {"assumption3_threshold", p.assumption3_threshold}};
    doc["model"] = model_to_json(cfg.model);
    doc["window"] = {{"type", window_name(cfg.window.kind)}, {"p", cfg.window.p}};
    nlohmann::ordered_json drive;
    drive["type"] = drive_kind_name(cfg.drive.kind);
    if (is_piecewise(cfg.drive.kind)) {
        auto bps = nlohmann::ordered_json::array();
        for (const auto& bp : cfg.drive.breakpoints) bps.push_back({bp.t, bp.value});
        drive["breakpoints"] = bps;
    } else {
        drive["amplitude"] = cfg.drive.amplitude;
        if (is_periodic(cfg.drive.kind)) {
            drive["frequency"] = cfg.drive.frequency;
            drive["phase"] = cfg.drive.phase;
        }
    }
    doc["drive"] = drive;
    doc["duration"] = cfg.duration;
    doc["dt"] = cfg.dt;
    doc["integrator"] = integrator_name(cfg.integrator);
    doc["w0"] = cfg.w0;
    doc["output_path"] = cfg.output_path;
    doc["output_format"] = format_name(cfg.output_format);
    return doc.dump(2);
}

/// Compact model spec used on the command line:
/// "uniform", "approx-on", "approx-off", "approx-midpoint[:alpha:beta]", "sigmoid:<half_width>".
inline FieldModel parse_model_spec(std::string_view spec) {
    const std::string field = "models";
    const auto colon = spec.find(':');
    const std::string_view name = spec.substr(0, colon);
    FieldModel model = detail::model_from_name(name, field);
    const std::string_view rest = colon == std::string_view::npos ? "" : spec.substr(colon + 1);
    try {
        if (auto* mid = std::get_if<models::ApproxMidpoint>(&model)) {
            if (!rest.empty()) {
                const auto sep = rest.find(':');
                if (sep == std::string_view::npos)
                    throw ConfigError(field, "approx-midpoint takes alpha:beta");
                mid->alpha = parse_quantity(rest.substr(0, sep), Dimension::Dimensionless);
                mid->beta = parse_quantity(rest.substr(sep + 1), Dimension::Dimensionless);
            }
        } else if (auto* sig = std::get_if<models::Sigmoid>(&model)) {
            if (rest.empty()) throw ConfigError(field, "sigmoid needs a half-width, e.g. sigmoid:0.1nm");
            sig->half_width = parse_quantity(rest, Dimension::Length);
        } else if (!rest.empty()) {
            throw ConfigError(field, "model '" + std::string(name) + "' takes no parameters");
        }
    } catch (const ConfigError&) {
        throw;
    } catch (const std::invalid_argument& e) {
        throw ConfigError(field, e.what());
    }
    return model;
}

inline std::string model_spec(const FieldModel& model) {
    std::string s = model_name(model);
    if (const auto* mid = std::get_if<models::ApproxMidpoint>(&model)) {
        if (mid->alpha != 1.0 || mid->beta != 1.0)
            s += ":" + format_number(mid->alpha) + ":" + format_number(mid->beta);
    } else if (const auto* sig = std::get_if<models::Sigmoid>(&model)) {
        s += ":" + format_number(sig->half_width);
    }
    return s;
}

} // namespace memdrift::io

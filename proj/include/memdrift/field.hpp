#pragma once

// Field descriptions governing boundary drift.
//
// The piece-wise uniform field is L(x) = L_on for x < w and L_off for x > w
// with L_on = R_on I / D and L_off = R_off I / D. It is undefined at the
// discontinuity x = w; the three step approximations pick L_on, L_off or the
// weighted midpoint there. The sigmoid model replaces the step with a logistic
// transition of half-width t centred on w.

#include "memdrift/device.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>
#include <type_traits>
#include <variant>
#include <vector>

namespace memdrift {

namespace models {

/// Single field V/D across the whole device; dw/dt depends on R(w).
struct Uniform {
    bool operator==(const Uniform&) const = default;
};
/// Field at w taken as the doped-region field L_on.
struct ApproxOn {
    bool operator==(const ApproxOn&) const = default;
};
/// Field at w taken as the undoped-region field L_off.
struct ApproxOff {
    bool operator==(const ApproxOff&) const = default;
};
/// Field at w taken as (alpha L_on + beta L_off) / (alpha + beta).
struct ApproxMidpoint {
    double alpha = 1.0;
    double beta = 1.0;
    bool operator==(const ApproxMidpoint&) const = default;
};
/// Logistic transition between L_on and L_off of half-width t (width S = 2t).
struct Sigmoid {
    double half_width = 1e-10;
    bool operator==(const Sigmoid&) const = default;
};

} // namespace models

using FieldModel = std::variant<models::Uniform, models::ApproxOn, models::ApproxOff,
                                models::ApproxMidpoint, models::Sigmoid>;

inline std::string model_name(const FieldModel& model) {
    return std::visit(
        [](const auto& m) -> std::string {
            using M = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<M, models::Uniform>) return "uniform";
            else if constexpr (std::is_same_v<M, models::ApproxOn>) return "approx-on";
            else if constexpr (std::is_same_v<M, models::ApproxOff>) return "approx-off";
            else if constexpr (std::is_same_v<M, models::ApproxMidpoint>) return "approx-midpoint";
            else return "sigmoid";
        },
        model);
}

/// Checks variant parameters. Returns non-fatal diagnostics.
inline std::vector<std::string> validate_model(const FieldModel& model, const DeviceParams& p) {
    std::vector<std::string> diagnostics;
    if (const auto* mid = std::get_if<models::ApproxMidpoint>(&model)) {
        if (!std::isfinite(mid->alpha) || mid->alpha <= 0.0)
            throw ParameterError("alpha", "alpha must be positive and finite");
        if (!std::isfinite(mid->beta) || mid->beta <= 0.0)
            throw ParameterError("beta", "beta must be positive and finite");
    } else if (const auto* sig = std::get_if<models::Sigmoid>(&model)) {
        if (!std::isfinite(sig->half_width) || sig->half_width <= 0.0)
            throw ParameterError("half_width", "sigmoid half_width must be positive and finite");
        if (sig->half_width > 0.5 * p.thickness_d) {
            std::ostringstream msg;
            msg << "sigmoid half_width " << sig->half_width
                << " exceeds D/2; the transition region spans most of the device";
            diagnostics.push_back(msg.str());
        }
    }
    return diagnostics;
}

struct BulkFields {
    double on;   ///< field across the doped region [V/m]
    double off;  ///< field across the undoped region [V/m]
};

inline BulkFields bulk_fields(const DeviceParams& p, double current) {
    return {p.r_on * current / p.thickness_d, p.r_off * current / p.thickness_d};
}

/// Field value the given model assigns to the boundary itself. Independent of w.
/// The uniform model has no such value and is rejected.
inline double boundary_field(const DeviceParams& p, const FieldModel& model, double current) {
    const auto [l_on, l_off] = bulk_fields(p, current);
    return std::visit(
        [&](const auto& m) -> double {
            using M = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<M, models::Uniform>) {
                throw std::invalid_argument(
                    "uniform field model has no w-independent boundary field");
            } else if constexpr (std::is_same_v<M, models::ApproxOn>) {
                return l_on;
            } else if constexpr (std::is_same_v<M, models::ApproxOff>) {
                return l_off;
            } else if constexpr (std::is_same_v<M, models::ApproxMidpoint>) {
                return (m.alpha * l_on + m.beta * l_off) / (m.alpha + m.beta);
            } else {
                // logistic is exactly 1/2 at its centre
                return 0.5 * (l_on + l_off);
            }
        },
        model);
}

/// Logistic approximation to the step: 1 / (1 + exp(-(w - x)/t)).
/// Tends to 1 behind the boundary (x << w) and 0 ahead of it.
inline double smoothed_heaviside(double x, double w, double half_width) {
    if (!(half_width > 0.0))
        throw ParameterError("half_width", "half_width must be positive");
    const double exponent = std::clamp(-(w - x) / half_width, -700.0, 700.0);
    return 1.0 / (1.0 + std::exp(exponent));
}

/// Field at position x for a boundary at w.
inline double field_at(const DeviceParams& p, const FieldModel& model, double w, double current,
                       double x) {
    detail::require_w_in_range(p, w);
    if (!(x >= 0.0 && x <= p.thickness_d))
        throw DomainError("sample position x outside [0, D]");
    const auto [l_on, l_off] = bulk_fields(p, current);
    if (std::holds_alternative<models::Uniform>(model))
        return current * total_resistance(p, w) / p.thickness_d;
    if (const auto* sig = std::get_if<models::Sigmoid>(&model)) {
        const double ahead = 1.0 - smoothed_heaviside(x, w, sig->half_width);
        return l_on + (l_off - l_on) * ahead;
    }
    if (x < w) return l_on;
    if (x > w) return l_off;
    return boundary_field(p, model, current);
}

struct FieldSample {
    double x;      ///< position [m]
    double field;  ///< field [V/m]
};

struct FieldProfile {
    std::vector<FieldSample> samples;
    FieldModel model;
    double current = 0.0;
    double w = 0.0;
};

/// Samples the field on a uniform grid of n_samples points spanning [0, D].
inline FieldProfile field_profile(const DeviceParams& p, const FieldModel& model, double w,
                                  double current, std::size_t n_samples) {
    if (n_samples < 2)
        throw ParameterError("samples", "field profile needs at least two samples");
    detail::require_w_in_range(p, w);
    validate_model(model, p);

    FieldProfile profile{{}, model, current, w};
    profile.samples.reserve(n_samples);
    const double last = static_cast<double>(n_samples - 1);
    for (std::size_t i = 0; i < n_samples; ++i) {
        const double x =
            i + 1 == n_samples ? p.thickness_d : p.thickness_d * (static_cast<double>(i) / last);
        profile.samples.push_back({x, field_at(p, model, w, current, x)});
    }
    return profile;
}

} // namespace memdrift

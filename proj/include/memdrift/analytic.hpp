#pragma once

// Closed-form boundary position and memristance as functions of charge.
//
// The three step approximations give a constant boundary field, so the
// boundary moves linearly with charge: w(q) = mu_v R_eff q / D.
// The uniform field gives dw/dq = mu_v R(w) / D, whose solution with w(0) = 0 is
//   w(q) = D R_off (exp(k q) - 1) / (R_on - R_off),  k = mu_v (R_on - R_off) / D^2
//   M(q) = R_off exp(k q).

#include "memdrift/device.hpp"
#include "memdrift/field.hpp"

#include <cmath>
#include <optional>

namespace memdrift {

namespace detail {

inline void require_closed_form(const FieldModel& model) {
    if (std::holds_alternative<models::Sigmoid>(model))
        throw std::invalid_argument(
            "sigmoid field model has no closed-form solution; use the simulator");
}

inline void require_charge(double q) {
    if (!(q >= 0.0) || !std::isfinite(q))
        throw DomainError("charge q must be non-negative and finite");
}

// R_on and R_off so close that the exponential degenerates to a line.
inline bool degenerate_uniform(const DeviceParams& p) {
    return std::abs(p.r_on - p.r_off) <= 1e-12 * std::max(p.r_on, p.r_off);
}

} // namespace detail

/// Resistance whose "R I / D" field drives the boundary for a step model.
/// Empty for the uniform model, whose driving resistance is R(w).
inline std::optional<double> effective_resistance(const DeviceParams& p, const FieldModel& model) {
    if (std::holds_alternative<models::Uniform>(model)) return std::nullopt;
    // boundary_field is linear in I, so a unit current recovers R_eff / D.
    return boundary_field(p, model, 1.0) * p.thickness_d;
}

/// Charge needed to drive the boundary from 0 to D.
inline double charge_to_switch(const DeviceParams& p, const FieldModel& model) {
    detail::require_closed_form(model);
    const double d2 = p.thickness_d * p.thickness_d;
    if (const auto r_eff = effective_resistance(p, model))
        return d2 / (p.mobility_v * *r_eff);
    if (detail::degenerate_uniform(p))
        return d2 / (p.mobility_v * p.r_off);
    return d2 * std::log(p.r_off / p.r_on) / (p.mobility_v * (p.r_off - p.r_on));
}

struct ClampedValue {
    double value;
    bool saturated;  ///< q lay beyond the switching charge; value clamped
};

inline ClampedValue w_of_q(const DeviceParams& p, const FieldModel& model, double q) {
    detail::require_closed_form(model);
    detail::require_charge(q);
    const double q_max = charge_to_switch(p, model);
    if (q >= q_max) return {p.thickness_d, q > q_max};

    const double d = p.thickness_d;
    double w;
    if (const auto r_eff = effective_resistance(p, model)) {
        w = p.mobility_v * *r_eff * q / d;
    } else if (detail::degenerate_uniform(p)) {
        w = p.mobility_v * p.r_off * q / d;
    } else {
        const double k = p.mobility_v * (p.r_on - p.r_off) / (d * d);
        w = d * p.r_off * std::expm1(k * q) / (p.r_on - p.r_off);
    }
    return {std::clamp(w, 0.0, d), false};
}

/// M(q); equals total_resistance(w_of_q(q)). Held at R_on beyond the switching charge.
inline double memristance_of_q(const DeviceParams& p, const FieldModel& model, double q) {
    detail::require_closed_form(model);
    detail::require_charge(q);
    const double q_max = charge_to_switch(p, model);
    if (q >= q_max) return p.r_on;

    const double d2 = p.thickness_d * p.thickness_d;
    if (const auto r_eff = effective_resistance(p, model))
        return p.r_off - p.mobility_v * *r_eff * (p.r_off - p.r_on) * q / d2;
    if (detail::degenerate_uniform(p)) return p.r_off;
    return p.r_off * std::exp(-p.mobility_v * (p.r_off - p.r_on) * q / d2);
}

/// Widely published linear memristance R_off (1 - mu_v R_on q / D^2), i.e. the
/// approx-on result with its R_on^2 term dropped.
inline double strukov_memristance(const DeviceParams& p, double q) {
    detail::require_charge(q);
    const double d2 = p.thickness_d * p.thickness_d;
    return p.r_off * (1.0 - p.mobility_v * p.r_on * q / d2);
}

/// dw/dt = mu_v times the field the model assigns to the boundary.
inline double boundary_speed(const DeviceParams& p, const FieldModel& model, double current,
                             double w) {
    detail::require_w_in_range(p, w);
    if (std::holds_alternative<models::Uniform>(model))
        return p.mobility_v * current * total_resistance(p, w) / p.thickness_d;
    return p.mobility_v * boundary_field(p, model, current);
}

/// Closed-form solution bundle for one model.
class ClosedFormSolution {
public:
    ClosedFormSolution(DeviceParams params, FieldModel model)
        : params_(validate_params(params).params), model_(std::move(model)) {
        validate_model(model_, params_);
        q_max_ = charge_to_switch(params_, model_);
    }

    const DeviceParams& params() const noexcept { return params_; }
    const FieldModel& model() const noexcept { return model_; }
    double q_max() const noexcept { return q_max_; }

    double w(double q) const { return w_of_q(params_, model_, q).value; }
    double memristance(double q) const { return memristance_of_q(params_, model_, q); }

    /// Slope dw/dq; before saturation, dw/dt = dw_dq * I.
    double dw_dq(double q) const {
        if (q >= q_max_) return 0.0;
        if (const auto r_eff = effective_resistance(params_, model_))
            return params_.mobility_v * *r_eff / params_.thickness_d;
        return params_.mobility_v * memristance(q) / params_.thickness_d;
    }

private:
    DeviceParams params_;
    FieldModel model_;
    double q_max_ = 0.0;
};

} // namespace memdrift

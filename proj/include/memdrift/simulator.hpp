#pragma once

// Fixed-step time integration of boundary drift under a voltage or current drive.
//
//   dw/dt = mu_v * L(w, t) * f(w/D)
//
// with L the boundary field of the chosen step/sigmoid model, or I R(w) / D for
// the uniform model. Under voltage drive the current is resolved algebraically,
// I = V(t) / R(w), at every stage. w is hard-clamped to [0, D]: at an edge an
// outward rate is zeroed.

#include "memdrift/analytic.hpp"
#include "memdrift/device.hpp"
#include "memdrift/drive.hpp"
#include "memdrift/field.hpp"
#include "memdrift/window.hpp"

#include <cmath>
#include <string>
#include <vector>

namespace memdrift {

enum class Integrator { Euler, Rk4 };

inline std::string integrator_name(Integrator integrator) {
    return integrator == Integrator::Euler ? "euler" : "rk4";
}

struct TraceSample {
    double t;  ///< [s]
    double v;  ///< [V]
    double i;  ///< [A]
    double w;  ///< [m]
    double r;  ///< [ohm]
    double q;  ///< [C]
};

struct SimulationTrace {
    std::vector<TraceSample> samples;
    DeviceParams params;
    FieldModel model;
    DriveWaveform drive;
    WindowSpec window;
    double dt = 0.0;
    Integrator integrator = Integrator::Rk4;
    double w0 = 0.0;
    std::size_t saturated_steps = 0;  ///< steps that ended pinned at an edge
};

namespace detail {

class Stepper {
public:
    Stepper(const DeviceParams& params, const FieldModel& model, const WindowSpec& window,
            const DriveWaveform& drive, Integrator integrator)
        : p_(params), window_(window), drive_(drive), integrator_(integrator),
          uniform_(std::holds_alternative<models::Uniform>(model)),
          voltage_drive_(is_voltage_drive(drive.kind)) {
        if (!uniform_) speed_per_ampere_ = params.mobility_v * boundary_field(params, model, 1.0);
    }

    double resistance(double w) const {
        const double x = w / p_.thickness_d;
        return p_.r_on * x + p_.r_off * (1.0 - x);
    }

    double current(double t, double w) const {
        const double value = drive_value(drive_, t);
        return voltage_drive_ ? value / resistance(w) : value;
    }

    struct Rate {
        double value;
        bool blocked;  ///< an outward push at an edge was zeroed
    };

    Rate rate(double t, double w) const {
        const double i = current(t, w);
        double speed = uniform_ ? p_.mobility_v * i * resistance(w) / p_.thickness_d
                                : speed_per_ampere_ * i;
        if (window_.kind != WindowKind::None) {
            const double sign = i > 0.0 ? 1.0 : (i < 0.0 ? -1.0 : 0.0);
            speed *= apply_window(w / p_.thickness_d, window_, sign);
        }
        if ((w >= p_.thickness_d && speed > 0.0) || (w <= 0.0 && speed < 0.0))
            return {0.0, true};
        return {speed, false};
    }

    double clamp_w(double w) const { return std::clamp(w, 0.0, p_.thickness_d); }

    /// Advances state from state.t to t1.
    BoundaryState advance(const BoundaryState& state, double t1) const {
        const double t0 = state.t;
        const double h = t1 - t0;
        const double w0 = state.w;

        const Rate k1 = rate(t0, w0);
        double w_raw;
        if (integrator_ == Integrator::Euler) {
            w_raw = w0 + h * k1.value;
        } else {
            const double th = t0 + 0.5 * h;
            const Rate k2 = rate(th, clamp_w(w0 + 0.5 * h * k1.value));
            const Rate k3 = rate(th, clamp_w(w0 + 0.5 * h * k2.value));
            const Rate k4 = rate(t1, clamp_w(w0 + h * k3.value));
            w_raw = w0 + (h / 6.0) * (k1.value + 2.0 * k2.value + 2.0 * k3.value + k4.value);
        }
        const double w1 = clamp_w(w_raw);

        BoundaryState next;
        next.t = t1;
        next.w = w1;
        next.q = state.q + 0.5 * h * (current(t0, w0) + current(t1, w1));
        next.saturated = k1.blocked || w1 != w_raw;
        if (!std::isfinite(next.w) || !std::isfinite(next.q))
            throw SimulationError("non-finite state produced at t=" + std::to_string(t1));
        return next;
    }

    TraceSample sample(const BoundaryState& s) const {
        const double r = resistance(s.w);
        const double value = drive_value(drive_, s.t);
        if (voltage_drive_) return {s.t, value, value / r, s.w, r, s.q};
        return {s.t, r * value, value, s.w, r, s.q};
    }

private:
    DeviceParams p_;
    WindowSpec window_;
    DriveWaveform drive_;
    Integrator integrator_;
    bool uniform_;
    bool voltage_drive_;
    double speed_per_ampere_ = 0.0;
};

inline void require_state(const DeviceParams& p, const BoundaryState& s) {
    if (!std::isfinite(s.w) || !std::isfinite(s.q) || !std::isfinite(s.t))
        throw SimulationError("non-finite boundary state");
    require_w_in_range(p, s.w);
    if (s.t < 0.0) throw DomainError("state time must be non-negative");
}

inline void validate_inputs(const DeviceParams& params, const FieldModel& model,
                            const WindowSpec& window, const DriveWaveform& drive) {
    validate_params(params);
    validate_model(model, params);
    validate_window(window);
    validate_drive(drive);
}

} // namespace detail

/// Advances one device by dt.
inline BoundaryState step(const BoundaryState& state, const DeviceParams& params,
                          const FieldModel& model, const WindowSpec& window,
                          const DriveWaveform& drive, double dt,
                          Integrator integrator = Integrator::Rk4) {
    if (!std::isfinite(dt) || dt <= 0.0) throw ParameterError("dt", "dt must be positive");
    detail::validate_inputs(params, model, window, drive);
    detail::require_state(params, state);
    return detail::Stepper(params, model, window, drive, integrator).advance(state, state.t + dt);
}

/// Runs from t = 0 to ceil(duration/dt) steps, recording every step.
inline SimulationTrace simulate(const DeviceParams& params, const FieldModel& model,
                                const WindowSpec& window, const DriveWaveform& drive,
                                double duration, double dt,
                                Integrator integrator = Integrator::Rk4, double w0 = 0.0) {
    if (!std::isfinite(duration) || duration <= 0.0)
        throw ParameterError("duration", "duration must be positive");
    if (!std::isfinite(dt) || dt <= 0.0) throw ParameterError("dt", "dt must be positive");
    if (dt >= duration) throw ParameterError("dt", "dt must be smaller than duration");
    detail::validate_inputs(params, model, window, drive);
    detail::require_w_in_range(params, w0);

    const double ratio = duration / dt;
    const double nearest = std::round(ratio);
    const auto n_steps = static_cast<std::size_t>(
        std::abs(ratio - nearest) <= 1e-9 * nearest ? nearest : std::ceil(ratio));

    const detail::Stepper stepper(params, model, window, drive, integrator);
    SimulationTrace trace{{}, params, model, drive, window, dt, integrator, w0, 0};
    trace.samples.reserve(n_steps + 1);

    BoundaryState state{w0, 0.0, 0.0, false};
    trace.samples.push_back(stepper.sample(state));
    for (std::size_t k = 1; k <= n_steps; ++k) {
        state = stepper.advance(state, static_cast<double>(k) * dt);
        if (state.saturated) ++trace.saturated_steps;
        trace.samples.push_back(stepper.sample(state));
    }
    return trace;
}

} // namespace memdrift

#pragma once

#include "memdrift/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

namespace memdrift {

enum class DriveKind {
    SineVoltage,
    SineCurrent,
    ConstantVoltage,
    ConstantCurrent,
    PiecewiseLinearVoltage,
    PiecewiseLinearCurrent,
};

struct Breakpoint {
    double t;
    double value;
    bool operator==(const Breakpoint&) const = default;
};

/// Electrical drive applied across the device. Values are volts for the
/// voltage kinds and amperes for the current kinds.
struct DriveWaveform {
    DriveKind kind = DriveKind::SineVoltage;
    double amplitude = 1.0;
    double frequency = 1.0;  ///< [Hz], sine kinds only
    double phase = 0.0;      ///< [rad], sine kinds only
    std::vector<Breakpoint> breakpoints;  ///< piecewise-linear kinds only

    bool operator==(const DriveWaveform&) const = default;
};

inline bool is_voltage_drive(DriveKind kind) {
    return kind == DriveKind::SineVoltage || kind == DriveKind::ConstantVoltage ||
           kind == DriveKind::PiecewiseLinearVoltage;
}

inline bool is_periodic(DriveKind kind) {
    return kind == DriveKind::SineVoltage || kind == DriveKind::SineCurrent;
}

inline bool is_piecewise(DriveKind kind) {
    return kind == DriveKind::PiecewiseLinearVoltage || kind == DriveKind::PiecewiseLinearCurrent;
}

inline std::string drive_kind_name(DriveKind kind) {
    switch (kind) {
    case DriveKind::SineVoltage: return "sine-voltage";
    case DriveKind::SineCurrent: return "sine-current";
    case DriveKind::ConstantVoltage: return "constant-voltage";
    case DriveKind::ConstantCurrent: return "constant-current";
    case DriveKind::PiecewiseLinearVoltage: return "piecewise-linear-voltage";
    case DriveKind::PiecewiseLinearCurrent: return "piecewise-linear-current";
    }
    return "unknown";
}

inline void validate_drive(const DriveWaveform& drive) {
    if (!std::isfinite(drive.amplitude))
        throw ParameterError("amplitude", "drive amplitude must be finite");
    if (is_periodic(drive.kind)) {
        if (!std::isfinite(drive.frequency) || drive.frequency <= 0.0)
            throw ParameterError("frequency", "periodic drive needs a positive frequency");
        if (!std::isfinite(drive.phase))
            throw ParameterError("phase", "drive phase must be finite");
    }
    if (is_piecewise(drive.kind)) {
        if (drive.breakpoints.empty())
            throw ParameterError("breakpoints", "piecewise-linear drive needs breakpoints");
        for (std::size_t i = 0; i < drive.breakpoints.size(); ++i) {
            const auto& bp = drive.breakpoints[i];
            if (!std::isfinite(bp.t) || !std::isfinite(bp.value))
                throw ParameterError("breakpoints", "breakpoints must be finite");
            if (i > 0 && !(bp.t > drive.breakpoints[i - 1].t))
                throw ParameterError("breakpoints", "breakpoint times must be strictly increasing");
        }
    }
}

/// Drive value at time t. Piecewise-linear drives hold their last value.
inline double drive_value(const DriveWaveform& drive, double t) {
    if (!(t >= 0.0)) throw DomainError("drive evaluated at negative time");
    switch (drive.kind) {
    case DriveKind::SineVoltage:
    case DriveKind::SineCurrent:
        return drive.amplitude * std::sin(2.0 * std::numbers::pi * drive.frequency * t + drive.phase);
    case DriveKind::ConstantVoltage:
    case DriveKind::ConstantCurrent:
        return drive.amplitude;
    case DriveKind::PiecewiseLinearVoltage:
    case DriveKind::PiecewiseLinearCurrent: {
        const auto& bps = drive.breakpoints;
        if (bps.empty()) throw ParameterError("breakpoints", "piecewise-linear drive needs breakpoints");
        if (t < bps.front().t) throw DomainError("time precedes the first breakpoint");
        if (t >= bps.back().t) return bps.back().value;
        const auto hi = std::upper_bound(bps.begin(), bps.end(), t,
                                         [](double tv, const Breakpoint& b) { return tv < b.t; });
        const auto lo = hi - 1;
        const double s = (t - lo->t) / (hi->t - lo->t);
        return lo->value + s * (hi->value - lo->value);
    }
    }
    return 0.0;
}

} // namespace memdrift

#pragma once

// Two-resistor memristor device: parameters, validation and the
// space-conserving resistance law R(w) = R_on w/D + R_off (1 - w/D).

#include "memdrift/errors.hpp"

#include <cmath>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace memdrift {

/// Physical constants of one memristor, all in SI units.
struct DeviceParams {
    double r_on = 1.0;           ///< fully doped resistance [ohm]
    double r_off = 160.0;        ///< fully undoped resistance [ohm]
    double thickness_d = 1e-8;   ///< oxide thickness D [m]
    double mobility_v = 1e-14;   ///< dopant (vacancy) mobility [m^2/(V s)]
    double mobility_e = 1e-10;   ///< electron mobility [m^2/(V s)]
    bool assumption3_enforced = true;    ///< warn when R_on is not << R_off
    double assumption3_threshold = 10.0; ///< minimum R_off/R_on before warning

    bool operator==(const DeviceParams&) const = default;
};

/// Dynamic state of one device.
struct BoundaryState {
    double w = 0.0;  ///< boundary position [m], 0 <= w <= D
    double q = 0.0;  ///< charge passed since t = 0 [C]
    double t = 0.0;  ///< time [s]
    bool saturated = false; ///< last step was stopped by an edge of the device

    bool operator==(const BoundaryState&) const = default;
};

struct ValidatedParams {
    DeviceParams params;
    std::vector<std::string> diagnostics;
};

namespace detail {

inline void require_positive(std::string_view name, double value) {
    if (!std::isfinite(value) || value <= 0.0) {
        std::ostringstream msg;
        msg << name << " must be positive and finite (got " << value << ")";
        throw ParameterError(std::string(name), msg.str());
    }
}

inline void require_w_in_range(const DeviceParams& p, double w) {
    if (!(w >= 0.0 && w <= p.thickness_d)) {
        std::ostringstream msg;
        msg << "boundary position w=" << w << " outside [0, " << p.thickness_d << "]";
        throw DomainError(msg.str());
    }
}

} // namespace detail

/// Rejects non-positive or non-finite r_on, r_off, thickness_d, mobility_v.
/// A small R_off/R_on ratio is not fatal; it is reported as a diagnostic.
inline ValidatedParams validate_params(const DeviceParams& raw) {
    detail::require_positive("r_on", raw.r_on);
    detail::require_positive("r_off", raw.r_off);
    detail::require_positive("thickness_d", raw.thickness_d);
    detail::require_positive("mobility_v", raw.mobility_v);
    if (!std::isfinite(raw.mobility_e) || raw.mobility_e < 0.0)
        throw ParameterError("mobility_e", "mobility_e must be non-negative and finite");
    if (!std::isfinite(raw.assumption3_threshold) || raw.assumption3_threshold <= 0.0)
        throw ParameterError("assumption3_threshold", "assumption3_threshold must be positive");

    ValidatedParams out{raw, {}};
    if (raw.assumption3_enforced && raw.r_off / raw.r_on < raw.assumption3_threshold) {
        std::ostringstream msg;
        msg << "r_off/r_on = " << raw.r_off / raw.r_on << " is below "
            << raw.assumption3_threshold << "; the R_on << R_off assumption does not hold";
        out.diagnostics.push_back(msg.str());
    }
    return out;
}

inline double normalized_position(const DeviceParams& p, double w) {
    return w / p.thickness_d;
}

inline double total_resistance(const DeviceParams& p, double w) {
    detail::require_w_in_range(p, w);
    const double x = w / p.thickness_d;
    return p.r_on * x + p.r_off * (1.0 - x);
}

/// Instantaneously ohmic: V = R(w) I.
inline double memristor_voltage(const DeviceParams& p, double w, double current) {
    return total_resistance(p, w) * current;
}

/// Mobility of the combined carrier population: (n_v mu_v + n_e mu_e) / N.
inline double effective_mobility(double n_v, double n_e, double mu_v, double mu_e) {
    if (!(n_v >= 0.0) || !(n_e >= 0.0))
        throw DomainError("carrier counts must be non-negative");
    if (!(mu_v >= 0.0) || !(mu_e >= 0.0))
        throw DomainError("mobilities must be non-negative");
    const double n = n_v + n_e;
    if (n <= 0.0)
        throw DomainError("total carrier count N = n_v + n_e must be positive");
    return (n_v * mu_v + n_e * mu_e) / n;
}

} // namespace memdrift

#pragma once

#include "memdrift/errors.hpp"

#include <cmath>
#include <string>

namespace memdrift {

enum class WindowKind { None, Joglekar, Biolek };

/// Edge window f(w/D) multiplying the boundary speed.
struct WindowSpec {
    WindowKind kind = WindowKind::None;
    int p = 1;

    bool operator==(const WindowSpec&) const = default;
};

inline std::string window_name(WindowKind kind) {
    switch (kind) {
    case WindowKind::None: return "none";
    case WindowKind::Joglekar: return "joglekar";
    case WindowKind::Biolek: return "biolek";
    }
    return "unknown";
}

inline void validate_window(const WindowSpec& spec) {
    if (spec.kind != WindowKind::None && spec.p < 1)
        throw ParameterError("p", "window exponent p must be a positive integer");
}

/// Joglekar: 1 - (2x - 1)^(2p). Biolek: 1 - (x - stp(-i))^(2p), where
/// stp(y) = 1 for y >= 0, so the window only closes at the edge the current
/// is pushing towards. Note that Joglekar pins a boundary that starts at an edge.
inline double apply_window(double w_norm, const WindowSpec& spec, double current_sign = 1.0) {
    if (!(w_norm >= 0.0 && w_norm <= 1.0))
        throw DomainError("normalized position outside [0, 1]");
    const int exponent = 2 * spec.p;
    switch (spec.kind) {
    case WindowKind::None:
        return 1.0;
    case WindowKind::Joglekar:
        return 1.0 - std::pow(2.0 * w_norm - 1.0, exponent);
    case WindowKind::Biolek: {
        const double stp = -current_sign >= 0.0 ? 1.0 : 0.0;
        return 1.0 - std::pow(w_norm - stp, exponent);
    }
    }
    return 1.0;
}

} // namespace memdrift

#pragma once

// Pinched-hysteresis fingerprints of a simulated trace: residual current at the
// voltage zero crossings, and the enclosed I-V loop area over the final period.

#include "memdrift/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <vector>

namespace memdrift {

namespace detail {

struct VIPoint {
    double v;
    double i;
};

inline double shoelace(const std::vector<VIPoint>& poly) {
    if (poly.size() < 3) return 0.0;
    double twice = 0.0;
    for (std::size_t k = 0; k < poly.size(); ++k) {
        const auto& a = poly[k];
        const auto& b = poly[(k + 1) % poly.size()];
        twice += a.v * b.i - b.v * a.i;
    }
    return 0.5 * std::abs(twice);
}

// Current linearly interpolated at the voltage zero between samples a and b.
inline double current_at_zero(const TraceSample& a, const TraceSample& b) {
    const double s = a.v / (a.v - b.v);
    return a.i + s * (b.i - a.i);
}

inline bool crosses(const TraceSample& a, const TraceSample& b) {
    return (a.v < 0.0 && b.v > 0.0) || (a.v > 0.0 && b.v < 0.0);
}

} // namespace detail

/// Largest |I| at a zero of V: samples where V is exactly zero, plus linear
/// interpolation across every sign change.
inline double pinch_residual(const SimulationTrace& trace) {
    const auto& s = trace.samples;
    bool found = false;
    double worst = 0.0;
    for (std::size_t k = 0; k < s.size(); ++k) {
        if (s[k].v == 0.0) {
            found = true;
            worst = std::max(worst, std::abs(s[k].i));
        }
        if (k + 1 < s.size() && detail::crosses(s[k], s[k + 1])) {
            found = true;
            worst = std::max(worst, std::abs(detail::current_at_zero(s[k], s[k + 1])));
        }
    }
    if (!found) throw SimulationError("no zero crossings of V in trace");
    return worst;
}

/// Enclosed area of the I-V curve over the last full drive period [V A].
///
/// A pinched loop is a figure eight whose lobes circulate in opposite senses,
/// so the curve is split at the V zero crossings and the absolute lobe areas
/// summed. Partial lobes at the two ends of the window are joined, since the
/// window covers exactly one period.
inline double loop_area(const SimulationTrace& trace) {
    if (!is_periodic(trace.drive.kind))
        throw SimulationError("loop area needs a periodic drive");
    const auto& s = trace.samples;
    if (s.size() < 3) throw SimulationError("trace shorter than one drive period");
    const double period = 1.0 / trace.drive.frequency;
    const double t_end = s.back().t;
    const double tol = 1e-9 * period;
    if (t_end - s.front().t < period - tol)
        throw SimulationError("trace shorter than one drive period");

    std::size_t first = 0;
    while (first < s.size() && s[first].t < t_end - period - tol) ++first;

    // Build lobes; each crossing closes the current lobe and opens the next.
    std::vector<std::vector<detail::VIPoint>> lobes(1);
    bool opens_at_crossing = s[first].v == 0.0;
    for (std::size_t k = first; k < s.size(); ++k) {
        lobes.back().push_back({s[k].v, s[k].i});
        if (s[k].v == 0.0 && k != first && k + 1 != s.size()) {
            lobes.emplace_back();
            lobes.back().push_back({s[k].v, s[k].i});
        } else if (k + 1 < s.size() && detail::crosses(s[k], s[k + 1])) {
            const detail::VIPoint zero{0.0, detail::current_at_zero(s[k], s[k + 1])};
            lobes.back().push_back(zero);
            lobes.emplace_back();
            lobes.back().push_back(zero);
        }
    }
    if (!opens_at_crossing && lobes.size() > 1) {
        auto& tail = lobes.back();
        tail.insert(tail.end(), lobes.front().begin(), lobes.front().end());
        lobes.erase(lobes.begin());
    }

    double area = 0.0;
    for (const auto& lobe : lobes) area += detail::shoelace(lobe);
    return area;
}

struct SweepOptions {
    int periods = 3;               ///< periods simulated per frequency
    int steps_per_period = 2000;
    Integrator integrator = Integrator::Rk4;
    double w0 = 0.0;
    bool parallel = true;
};

struct SweepPoint {
    double frequency;
    double area;
    bool operator==(const SweepPoint&) const = default;
};

/// Loop area at each frequency, measured over the final of several periods.
/// Results are returned in input order.
inline std::vector<SweepPoint> frequency_sweep(const DeviceParams& params, const FieldModel& model,
                                               const WindowSpec& window,
                                               const DriveWaveform& base_drive,
                                               const std::vector<double>& frequencies,
                                               const SweepOptions& options = {}) {
    if (frequencies.size() < 2)
        throw ParameterError("frequencies", "frequency sweep needs at least two frequencies");
    if (!is_periodic(base_drive.kind))
        throw ParameterError("drive", "frequency sweep needs a sine drive");
    for (double f : frequencies)
        if (!std::isfinite(f) || f <= 0.0)
            throw ParameterError("frequencies", "frequencies must be positive");
    if (options.periods < 1)
        throw ParameterError("periods", "at least one period per frequency");
    if (options.steps_per_period < 2)
        throw ParameterError("steps_per_period", "at least two steps per period");

    auto run = [&](double f) {
        DriveWaveform drive = base_drive;
        drive.frequency = f;
        const double period = 1.0 / f;
        const auto trace = simulate(params, model, window, drive, options.periods * period,
                                    period / options.steps_per_period, options.integrator,
                                    options.w0);
        return SweepPoint{f, loop_area(trace)};
    };

    std::vector<SweepPoint> out;
    out.reserve(frequencies.size());
    if (options.parallel) {
        std::vector<std::future<SweepPoint>> jobs;
        jobs.reserve(frequencies.size());
        for (double f : frequencies) jobs.push_back(std::async(std::launch::async, run, f));
        for (auto& job : jobs) out.push_back(job.get());
    } else {
        for (double f : frequencies) out.push_back(run(f));
    }
    return out;
}

} // namespace memdrift

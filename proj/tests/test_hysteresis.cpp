#include "memdrift/hysteresis.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <numbers>

using namespace memdrift;

namespace {

const DeviceParams kDevice{1.0, 160.0, 1e-8, 1e-14};

DriveWaveform sine_voltage(double volts, double hz) {
    return {DriveKind::SineVoltage, volts, hz, 0.0, {}};
}

double max_abs_current(const SimulationTrace& tr) {
    double m = 0.0;
    for (const auto& s : tr.samples) m = std::max(m, std::abs(s.i));
    return m;
}

// Resistor of fixed value under a sine drive, built by hand.
SimulationTrace ohmic_trace(double r, double phase) {
    SimulationTrace tr;
    tr.drive = sine_voltage(2.0, 1.0);
    tr.drive.phase = phase;
    const int n = 1000;
    for (int k = 0; k <= 2 * n; ++k) {
        const double t = k / static_cast<double>(n);
        const double v = drive_value(tr.drive, t);
        tr.samples.push_back({t, v, v / r, 0.0, r, 0.0});
    }
    return tr;
}

} // namespace

TEST(Shoelace, UnitSquareAndOrientation) {
    const std::vector<detail::VIPoint> sq = {{0, 0}, {1, 0}, {1, 1}, {0, 1}};
    EXPECT_DOUBLE_EQ(detail::shoelace(sq), 1.0);
    const std::vector<detail::VIPoint> rev(sq.rbegin(), sq.rend());
    EXPECT_DOUBLE_EQ(detail::shoelace(rev), 1.0);
}

TEST(LoopArea, OhmicTraceEnclosesNothing) {
    for (double phase : {0.0, 0.7}) {
        const auto tr = ohmic_trace(37.0, phase);
        EXPECT_LE(loop_area(tr), 1e-12 * 2.0 * (2.0 / 37.0)) << phase;
        EXPECT_LE(pinch_residual(tr), 1e-15 * (2.0 / 37.0)) << phase;
    }
}

TEST(LoopArea, EllipseOracle) {
    // Lissajous V = sin, I = cos crosses V = 0 twice per period; each half-ellipse
    // closed by the chord on the I axis, total pi * a * b.
    SimulationTrace tr;
    tr.drive = sine_voltage(1.0, 1.0);
    const int n = 20000;
    for (int k = 0; k <= n; ++k) {
        const double t = k / static_cast<double>(n);
        tr.samples.push_back({t, 3 * std::sin(2 * std::numbers::pi * t), 0.5 * std::cos(2 * std::numbers::pi * t),
                              0, 1, 0});
    }
    EXPECT_NEAR(loop_area(tr), std::numbers::pi * 1.5, 1e-6);
}

TEST(LoopArea, SlowSineDriveHasOpenLoop) {
    const auto tr = simulate(kDevice, models::ApproxMidpoint{}, {}, sine_voltage(1.0, 100.0), 0.03, 1e-5 / 2,
                             Integrator::Rk4, 0.5e-8);
    double w_min = kDevice.thickness_d, w_max = 0.0;
    for (const auto& s : tr.samples) {
        w_min = std::min(w_min, s.w);
        w_max = std::max(w_max, s.w);
    }
    ASSERT_GE(w_max - w_min, 0.1 * kDevice.thickness_d);
    EXPECT_GT(loop_area(tr), 0.0);
}

TEST(LoopArea, ShrinksWithTenfoldFrequency) {
    auto area = [](double f) {
        return loop_area(simulate(kDevice, models::ApproxMidpoint{}, {}, sine_voltage(1.0, f), 3.0 / f,
                                  1.0 / f / 2000, Integrator::Rk4, 0.5e-8));
    };
    EXPECT_LT(area(1e4), area(1e3));
}

TEST(LoopArea, Errors) {
    auto tr = simulate(kDevice, models::ApproxOn{}, {}, sine_voltage(1.0, 1.0), 0.5, 1e-3);
    EXPECT_THROW(loop_area(tr), SimulationError);
    auto dc = simulate(kDevice, models::ApproxOn{}, {}, {DriveKind::ConstantCurrent, 1e-3, 1.0, 0.0, {}}, 1.0, 1e-3);
    EXPECT_THROW(loop_area(dc), SimulationError);
}

TEST(PinchResidual, SimulatedSineTracesPassThroughOrigin) {
    // Zero phase and an even number of steps per period put every V = 0 on the
    // sample grid.
    for (const FieldModel& m : {FieldModel{models::Uniform{}}, FieldModel{models::ApproxOn{}},
                                FieldModel{models::ApproxOff{}}, FieldModel{models::ApproxMidpoint{}},
                                FieldModel{models::Sigmoid{1e-10}}}) {
        for (double f : {1.0, 10.0, 100.0}) {
            for (WindowSpec win : {WindowSpec{}, WindowSpec{WindowKind::Biolek, 1}}) {
                const auto tr = simulate(kDevice, m, win, sine_voltage(1.0, f), 2.0 / f, 1.0 / f / 1000,
                                         Integrator::Rk4, 0.5e-8);
                EXPECT_LT(pinch_residual(tr), 1e-9 * max_abs_current(tr)) << model_name(m) << " f=" << f;
            }
        }
    }
}

TEST(PinchResidual, OffGridCrossingsConvergeWithResolution) {
    // Interpolating across a crossing mixes two resistances; the error falls
    // faster than quadratically in the step.
    DriveWaveform d = sine_voltage(1.0, 1.0);
    d.phase = 0.3;
    auto rel = [&](int n) {
        const auto tr = simulate(kDevice, models::ApproxMidpoint{}, {}, d, 2.0, 1.0 / n, Integrator::Rk4, 0.5e-8);
        return pinch_residual(tr) / max_abs_current(tr);
    };
    const double coarse = rel(1000), fine = rel(10000);
    EXPECT_LT(fine, coarse / 100.0);
    EXPECT_LT(fine, 1e-5);
}

TEST(PinchResidual, ConstantCurrentHasNoCrossings) {
    const auto tr = simulate(kDevice, models::ApproxOn{}, {}, {DriveKind::ConstantCurrent, 1e-3, 1.0, 0.0, {}},
                             1.0, 1e-3);
    EXPECT_THROW(pinch_residual(tr), SimulationError);
}

TEST(FrequencySweep, MonotoneCollapseAboveKnee) {
    const std::vector<double> ladder = {1e3, 1e4, 1e5, 1e6};
    SweepOptions opts;
    opts.w0 = 0.5e-8;
    const auto pts = frequency_sweep(kDevice, models::ApproxMidpoint{}, {}, sine_voltage(1.0, 1.0), ladder, opts);
    ASSERT_EQ(pts.size(), ladder.size());
    for (std::size_t k = 0; k < pts.size(); ++k) EXPECT_EQ(pts[k].frequency, ladder[k]);
    for (std::size_t k = 1; k < pts.size(); ++k) EXPECT_LT(pts[k].area, pts[k - 1].area);
    EXPECT_LT(pts.back().area, 0.01 * pts.front().area);
}

TEST(FrequencySweep, DuplicatesAreIdenticalAndParallelMatchesSerial) {
    SweepOptions opts;
    opts.w0 = 0.5e-8;
    opts.steps_per_period = 500;
    const std::vector<double> freqs = {50.0, 50.0, 500.0};
    const auto par = frequency_sweep(kDevice, models::Uniform{}, {}, sine_voltage(1.0, 1.0), freqs, opts);
    opts.parallel = false;
    const auto ser = frequency_sweep(kDevice, models::Uniform{}, {}, sine_voltage(1.0, 1.0), freqs, opts);
    EXPECT_EQ(par[0], par[1]);
    EXPECT_EQ(par, ser);
}

TEST(FrequencySweep, Errors) {
    EXPECT_THROW(frequency_sweep(kDevice, models::ApproxOn{}, {}, sine_voltage(1.0, 1.0), {10.0}), ParameterError);
    EXPECT_THROW(frequency_sweep(kDevice, models::ApproxOn{}, {}, sine_voltage(1.0, 1.0), {10.0, -1.0}),
                 ParameterError);
    EXPECT_THROW(frequency_sweep(kDevice, models::ApproxOn{}, {}, {DriveKind::ConstantVoltage, 1.0, 1.0, 0.0, {}},
                                 {1.0, 2.0}),
                 ParameterError);
}

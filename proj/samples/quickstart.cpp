// Compares how fast each step approximation switches a TiO2 device and runs
// one pinched-hysteresis simulation.

#include "memdrift/memdrift.hpp"

#include <cstdio>

int main() {
    using namespace memdrift;
    const DeviceParams device{};  // R_on = 1, R_off = 160, D = 10 nm, mu_v = 1e-14 m^2/Vs

    const FieldModel approximations[] = {models::ApproxOn{}, models::ApproxMidpoint{},
                                         models::ApproxOff{}, models::Uniform{}};
    std::printf("%-16s %14s %14s\n", "model", "speed@1A [m/s]", "q_switch [C]");
    for (const auto& m : approximations) {
        std::printf("%-16s %14.6g %14.6g\n", model_name(m).c_str(),
                    boundary_speed(device, m, 1.0, 0.0), charge_to_switch(device, m));
    }

    DriveWaveform drive{DriveKind::SineVoltage, 1.0, 5.0, 0.0, {}};
    const auto trace = simulate(device, models::ApproxMidpoint{}, WindowSpec{}, drive, 0.6,
                                0.6 / 6000, Integrator::Rk4, 0.5 * device.thickness_d);
    std::printf("\nsine drive at %g Hz: loop area %.6g V*A, pinch residual %.3g A\n",
                drive.frequency, loop_area(trace), pinch_residual(trace));
}

#include "quadrover/ground_controller.hpp"

#include <algorithm>
#include <cmath>

namespace quadrover {

WheelSpeeds wheel_speeds(const GroundSetpoint& sp, const VehicleParams& p) {
    WheelSpeeds ws;
    ws.right = p.speed_gain_k1 * (sp.v_x + p.track_gain_k2 * sp.omega_z);
    ws.left = p.speed_gain_k1 * (sp.v_x - p.track_gain_k2 * sp.omega_z);
    return ws;
}

std::array<double, 4> motor_commands(const WheelSpeeds& ws, const VehicleParams& p) {
    const double wi = p.wheel_idle_speed;
    const double k3 = p.reduction_k3;
    return {-k3 * ws.right + wi, k3 * ws.right + wi,
            k3 * ws.left + wi, -k3 * ws.left + wi};
}

std::array<double, 4> clamp_commands(const std::array<double, 4>& cmd,
                                     const VehicleParams& p) {
    std::array<double, 4> out = cmd;
    for (int pair = 0; pair < 2; ++pair) {
        const int a = 2 * pair;
        const int b = a + 1;
        const double deficit = p.wheel_idle_speed - std::min(out[a], out[b]);
        if (deficit > 0.0) {
            out[a] += deficit;
            out[b] += deficit;
        }
    }
    return out;
}

ControlOutput ground_step(const GroundSetpoint& sp, const VehicleParams& p) {
    WheelSpeeds ws = wheel_speeds(sp, p);
    std::array<double, 4> mag = clamp_commands(motor_commands(ws, p), p);

    ControlOutput out;
    const double peak = *std::max_element(mag.begin(), mag.end());
    if (peak > p.motor_speed_max) {
        // Scale both wheels by one factor so the turn geometry survives.
        const double s = (p.motor_speed_max - p.wheel_idle_speed) /
                         (peak - p.wheel_idle_speed);
        ws.right *= s;
        ws.left *= s;
        mag = clamp_commands(motor_commands(ws, p), p);
        out.saturated = true;
    }

    for (int i = 0; i < 4; ++i) out.command.omega[i] = -mag[i];
    return out;
}

}  // namespace quadrover

#pragma once

#include <array>

#include "quadrover/params.hpp"
#include "quadrover/state.hpp"

namespace quadrover {

// Desired planar twist while driving: forward speed and yaw rate.
struct GroundSetpoint {
    double v_x{0.0};      // [m/s]
    double omega_z{0.0};  // [rad/s]
};

// Differential-drive map: w_r = k1 (v + k2 w), w_l = k1 (v - k2 w).
WheelSpeeds wheel_speeds(const GroundSetpoint& sp, const VehicleParams& p);

// Reverse-direction motor speed magnitudes realizing the wheel speeds through
// the differential: pair (1,2) drives the right wheel, (3,4) the left, each
// split +-k3 w about the idle speed w_i.
std::array<double, 4> motor_commands(const WheelSpeeds& ws, const VehicleParams& p);

// Keeps every magnitude at or above the idle speed by shifting a deficient
// pair up together, so pair differences (and thus wheel speeds) are
// preserved exactly. Idempotent.
std::array<double, 4> clamp_commands(const std::array<double, 4>& cmd,
                                     const VehicleParams& p);

// Full ground step: twist -> wheels -> clamped motor magnitudes -> signed
// (negative) setpoints. If the largest magnitude would exceed the motor
// redline, both wheel speeds are scaled down by a common factor and the
// output is flagged saturated.
ControlOutput ground_step(const GroundSetpoint& sp, const VehicleParams& p);

}  // namespace quadrover

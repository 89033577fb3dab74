#pragma once

#include <array>

#include "quadrover/params.hpp"

namespace quadrover {

// Per-rotor transmission state. motor_speed is the signed shaft speed
// commanded side (positive = propeller direction, negative = drivetrain
// direction). prop_speed is the propeller's own speed, never negative: the
// one-way bearing cannot drive it backwards.
struct ActuatorState {
    std::array<double, 4> motor_speed{};  // [rad/s], signed
    std::array<double, 4> prop_speed{};   // [rad/s], >= 0
    std::array<bool, 4> engaged{};        // bearing locked, prop follows motor
};

// Thrust of one propeller spinning at omega_p >= 0: f = c_t * omega_p^2 [N].
// Negative speed is a domain error (the bearing model keeps it impossible).
double propeller_thrust(double omega_p, const VehicleParams& p);

// Reaction drag torque about the rotor axis for a given thrust [N m].
double propeller_torque(double thrust, const VehicleParams& p);

// One-way bearing + propeller update over one step.
struct BearingStep {
    double prop_speed{};      // propeller speed after the step [rad/s]
    bool engaged{};           // bearing locked during the step
    double reaction_torque{}; // torque the prop side exerts back on the shaft [N m]
};

// If the shaft runs at or above the prop (motor_speed >= prop_speed, both in
// prop direction) the bearing locks and the prop follows the shaft exactly.
// Otherwise the prop freewheels: bearing friction drags it toward the shaft's
// speed magnitude while aero drag c_d w^2 brakes it, integrated explicitly.
BearingStep bearing_step(double motor_speed, double prop_speed, double dt,
                         const VehicleParams& p);

// Differential drivetrain output for one wheel given its motor pair's
// reverse-direction speed magnitudes: w = (omega_b - omega_a) / (2 k3).
double drivetrain_wheel_speed(double omega_a, double omega_b,
                              const VehicleParams& p);

// True when the wheels can hold the slope: tan(slope) <= mu.
bool traction_ok(double slope_deg, double mu);
bool traction_ok(double slope_deg, const VehicleParams& p);

}  // namespace quadrover

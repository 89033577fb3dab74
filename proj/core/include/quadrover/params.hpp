#pragma once

#include <cmath>

#include "quadrover/vec3.hpp"

namespace quadrover {

// Standard gravity used by the dynamics and controllers [m/s^2].
inline constexpr double kGravity = 9.81;

// Hover electrical power the default thrust coefficient is calibrated to [W].
inline constexpr double kDefaultHoverPowerW = 124.35;

namespace detail {

// Closed form for the thrust coefficient that makes level hover draw the
// given electrical power. Lives here so the VehicleParams default and
// calibrate_thrust_coeff() share one definition.
inline double hover_calibrated_ct(double mass, double torque_to_thrust,
                                  double motor_efficiency, double hover_power_w) {
    const double f = mass * kGravity / 4.0;  // per-rotor hover thrust [N]
    const double root = 4.0 * torque_to_thrust * f * std::sqrt(f) /
                        (motor_efficiency * hover_power_w);
    return root * root;
}

}  // namespace detail

// Physical and control constants for the vehicle. Field values are the
// defaults; load_config() overrides them from a key = value file.
struct VehicleParams {
    // Rigid body
    double mass{0.8};                      // [kg]
    Vec3 inertia{4.0e-3, 4.0e-3, 7.0e-3};  // body-frame diagonal [kg m^2]

    // Rotor geometry
    double arm_length{0.22};        // moment arm l [m]
    double torque_to_thrust{0.014};  // rotor drag/thrust ratio k [m]
    double thrust_coeff{detail::hover_calibrated_ct(0.8, 0.014, 0.70,
                                                    kDefaultHoverPowerW)};
                                    // c_t in f = c_t w^2 [N s^2/rad^2]

    // Position loop (second order, critically damped by default). The default
    // natural frequency sits a factor of ~5 below the attitude cascade's
    // 10 rad/s double pole (1/sqrt(tau_att tau_omega)); pushing it past
    // ~5 rad/s destabilizes the position/attitude loop.
    double omega_nat{2.0};          // natural frequency [rad/s]
    double zeta{1.0};               // damping ratio [-]
    double accel_sat{19.62};        // |a_des| ceiling [m/s^2]

    // Attitude cascade time constants, per body axis [s]
    Vec3 tau_att{0.2, 0.2, 0.5};
    Vec3 tau_omega{0.05, 0.05, 0.2};

    // Ground drive
    double speed_gain_k1{1.0 / 0.03};  // wheel speed per forward speed [rad/m]
    double track_gain_k2{0.11};        // effective half-track [m]
    double reduction_k3{3.0};          // motor-to-wheel differential ratio [-]
    double wheel_idle_speed{150.0};    // reverse-spin floor w_i [rad/s]
    double motor_speed_max{1200.0};    // motor redline [rad/s]

    // Motor and propeller transmission
    double motor_time_constant{0.03};        // first-order lag tau_m [s]
    double bearing_friction_torque{2.0e-4};  // freewheel drag on the prop [N m]
    double prop_inertia{1.0e-5};             // [kg m^2]
    double prop_drag_coeff{8.0e-8};  // aero drag torque c_d w^2 [N m s^2/rad^2]

    // Power model
    double motor_efficiency{0.70};     // shaft-to-electrical, flight [-]
    double drive_efficiency{0.85};     // wheel-to-electrical, ground [-]
    double idle_power{3.5};            // avionics + spinning drivetrain [W]
    double rolling_resistance{0.015};  // c_rr [-]
    double traction_mu{0.60};          // wheel-ground friction coefficient [-]

    // Mode switching
    double transition_duration{0.1};  // motor ramp time between modes [s]

    // Throws std::invalid_argument naming the first field out of range.
    void validate() const;

    static VehicleParams defaults() { return VehicleParams{}; }
};

}  // namespace quadrover

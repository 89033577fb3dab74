#pragma once

#include <array>

#include "quadrover/params.hpp"
#include "quadrover/rotation.hpp"
#include "quadrover/state.hpp"
#include "quadrover/vec3.hpp"

namespace quadrover {

// Desired position, yaw, and feedforward path derivatives for the flight
// loop. accel enters the position law directly; jerk sets the tilt-rate
// feedforward that keeps the attitude loop from lagging a moving thrust
// direction. Both stay zero for hold-position setpoints.
struct FlightSetpoint {
    Vec3 position{};
    Vec3 velocity{};
    double yaw{0.0};  // [rad]
    Vec3 accel{};     // [m/s^2]
    Vec3 jerk{};      // [m/s^3]
};

// Per-rotor thrusts out of the mixer [N]; saturated is set when any negative
// component had to be clipped to zero.
struct RotorThrusts {
    std::array<double, 4> f{};
    bool saturated{false};
};

// Total thrust magnitude and body torque demanded of the mixer.
struct ThrustTorque {
    double f_tot{0.0};  // [N]
    Vec3 tau{};         // [N m]
};

// Second-order position law:
//   a_des = a_ff + w_n^2 (p_des - p) + 2 zeta w_n (v_des - v)
// with |a_des| clipped to accel_sat. Gravity is not included.
Vec3 position_control(const FlightSetpoint& sp, const Vec3& position,
                      const Vec3& velocity, const VehicleParams& p);

// Tilt-prioritized attitude cascade. a_tot = a_des + g z_hat is the total
// specific force the rotors must produce; returns the desired body angular
// acceleration. jerk is the time derivative of a_tot along the reference;
// it adds the angular rate of the desired thrust direction to the rate
// setpoint so tracking a moving tilt does not rely on attitude error alone.
// Throws std::domain_error when |a_tot| <= 0.1 (direction undefined) or
// a_tot points within 1e-6 rad of straight down (unreachable).
Vec3 attitude_control(const Vec3& a_tot, double yaw_des, const Mat3& attitude,
                      const Vec3& body_rates, const VehicleParams& p,
                      const Vec3& jerk = {});

// Collective thrust m |a_tot| and torque diag(J) * alpha_des.
ThrustTorque thrusts_and_torque(const Vec3& a_tot, const Vec3& alpha_des,
                                const VehicleParams& p);

// Allocation to four rotors (X layout, rotors 1..4 = front-left, front-right,
// rear-right, rear-left; 1 and 3 spin so their drag torque is positive about
// body z). Negative solutions are clipped to zero and flagged.
RotorThrusts mix(double f_tot, const Vec3& tau, const VehicleParams& p);

// Exact inverse of mix() before clipping: body torque and collective thrust
// produced by the given per-rotor thrusts.
ThrustTorque allocation_wrench(const std::array<double, 4>& f,
                               const VehicleParams& p);

// Full cascade: position -> attitude -> mixer -> positive rotor speed
// setpoints w_i = sqrt(f_i / c_t).
ControlOutput flight_step(const FlightSetpoint& sp, const VehicleState& state,
                          const VehicleParams& p);

}  // namespace quadrover

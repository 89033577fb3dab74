#include "quadrover/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "quadrover/flight_controller.hpp"
#include "quadrover/power.hpp"

namespace quadrover {

namespace {

void check_dt(double dt) {
    if (!(dt > 0.0) || dt > 0.01) {
        throw std::domain_error("simulator: dt must be in (0, 0.01] s");
    }
}

// Exact discretization of the first-order motor lag over dt.
void advance_motors(ActuatorState& act, const MotorCommand& cmd, double dt,
                    const VehicleParams& p) {
    const double keep = std::exp(-dt / p.motor_time_constant);
    for (int i = 0; i < 4; ++i) {
        act.motor_speed[i] = cmd.omega[i] + (act.motor_speed[i] - cmd.omega[i]) * keep;
    }
}

void advance_props(ActuatorState& act, double dt, const VehicleParams& p) {
    for (int i = 0; i < 4; ++i) {
        const BearingStep b = bearing_step(act.motor_speed[i], act.prop_speed[i], dt, p);
        act.prop_speed[i] = b.prop_speed;
        act.engaged[i] = b.engaged;
    }
}

// Wheel speeds implied by the signed shaft speeds. In flight all four shafts
// run forward at similar speeds and the differential output stays near zero.
WheelSpeeds wheels_from_motors(const ActuatorState& act, const VehicleParams& p) {
    WheelSpeeds ws;
    ws.right = drivetrain_wheel_speed(act.motor_speed[1], act.motor_speed[0], p);
    ws.left = drivetrain_wheel_speed(act.motor_speed[2], act.motor_speed[3], p);
    return ws;
}

}  // namespace

double Terrain::height_at(double x) const {
    const double run = std::clamp(x, 0.0, extent);
    return std::tan(slope_deg * M_PI / 180.0) * run;
}

VehicleState step_flight(const VehicleState& state, const MotorCommand& cmd,
                         double dt, const VehicleParams& p) {
    check_dt(dt);
    VehicleState s = state;
    s.time += dt;

    advance_motors(s.actuators, cmd, dt, p);
    advance_props(s.actuators, dt, p);
    s.wheels = wheels_from_motors(s.actuators, p);

    // Every spinning prop lifts and applies its thrust moment: the axial
    // aero force loads the airframe through the shaft mount whether or not
    // the bearing is locked. Drag torque about body z flows only through
    // engaged (locked) bearings. Power is charged for the thrust state; at
    // the engage/freewheel dither boundary the motor is loaded essentially
    // continuously, and deep freewheel (ground idle, ~50 rad/s) costs mW.
    std::array<double, 4> f{};
    std::array<double, 4> f_engaged{};
    for (int i = 0; i < 4; ++i) {
        f[i] = propeller_thrust(s.actuators.prop_speed[i], p);
        f_engaged[i] = s.actuators.engaged[i] ? f[i] : 0.0;
    }
    ThrustTorque wrench = allocation_wrench(f, p);
    wrench.tau.z = allocation_wrench(f_engaged, p).tau.z;
    const Vec3 thrust_world = s.attitude * Vec3{0.0, 0.0, wrench.f_tot};

    s.energy_used += electrical_power_flight(f, p) * dt;

    if (s.on_ground) {
        if (thrust_world.z <= p.mass * kGravity) {
            // Still resting: shafts spin, body stays put.
            s.velocity = {};
            s.body_rates = {};
            return s;
        }
        s.on_ground = false;
    }

    const Vec3 accel = thrust_world / p.mass + Vec3{0.0, 0.0, -kGravity};
    s.velocity += accel * dt;
    s.position += s.velocity * dt;

    const Vec3& J = p.inertia;
    const Vec3 Jw{J.x * s.body_rates.x, J.y * s.body_rates.y, J.z * s.body_rates.z};
    const Vec3 gyro = s.body_rates.cross(Jw);
    s.body_rates += dt * Vec3{(wrench.tau.x - gyro.x) / J.x,
                              (wrench.tau.y - gyro.y) / J.y,
                              (wrench.tau.z - gyro.z) / J.z};

    const double ang = s.body_rates.norm() * dt;
    if (ang > 0.0) {
        s.attitude = s.attitude *
                     axis_angle_to_matrix({s.body_rates.normalized(), ang});
    }
    s.attitude = orthonormalized(s.attitude);

    if (s.position.z <= 0.0 && s.velocity.z <= 0.0) {
        // Touchdown on the staging plane: absorb the impact, keep the yaw.
        s.position.z = 0.0;
        s.velocity = {};
        s.body_rates = {};
        s.attitude = yaw_matrix(yaw_of(s.attitude));
        s.on_ground = true;
    }
    return s;
}

GroundStepResult step_ground(const VehicleState& state, const MotorCommand& cmd,
                             double dt, const Terrain& terrain,
                             const VehicleParams& p) {
    check_dt(dt);
    GroundStepResult out;
    VehicleState& s = out.state;
    s = state;
    s.time += dt;

    advance_motors(s.actuators, cmd, dt, p);
    advance_props(s.actuators, dt, p);

    const WheelSpeeds prev = state.wheels;
    s.wheels = wheels_from_motors(s.actuators, p);

    // Planar twist achieved by the wheels.
    const double v = (s.wheels.right + s.wheels.left) / (2.0 * p.speed_gain_k1);
    const double wz = (s.wheels.right - s.wheels.left) /
                      (2.0 * p.speed_gain_k1 * p.track_gain_k2);
    const double v_prev = (prev.right + prev.left) / (2.0 * p.speed_gain_k1);

    const bool on_slope = terrain.slope_deg > 0.0 && s.position.x >= 0.0 &&
                          s.position.x < terrain.extent;
    out.slip = on_slope && !traction_ok(terrain.slope_deg, terrain.friction(p));

    double yaw = yaw_of(s.attitude);
    yaw += wz * dt;

    const double v_eff = out.slip ? 0.0 : v;
    const double theta = terrain.slope_deg * M_PI / 180.0;
    // Surface-frame advance, mapped to world; z follows the terrain exactly.
    const double du = v_eff * std::cos(yaw) * dt;
    const double dw = v_eff * std::sin(yaw) * dt;
    const Vec3 old_pos = s.position;
    s.position.x += du * std::cos(theta);
    s.position.y += dw;
    s.position.z = terrain.height_at(s.position.x);
    s.velocity = (s.position - old_pos) / dt;

    s.attitude = yaw_matrix(yaw);
    s.body_rates = {0.0, 0.0, wz};
    s.on_ground = true;

    // Cornering scrubs the wheels sideways; charge it like an extra inertial
    // load through the friction coefficient.
    const double accel_eff = std::fabs(v_eff - v_prev) / dt +
                             terrain.friction(p) * std::fabs(v_eff * wz);
    const double power = electrical_power_ground(std::fabs(v_eff),
                                                 terrain.slope_deg, accel_eff, p);
    s.energy_used += power * dt;
    return out;
}

}  // namespace quadrover

#include "quadrover/actuation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace quadrover {

double propeller_thrust(double omega_p, const VehicleParams& p) {
    if (omega_p < 0.0) throw std::domain_error("propeller_thrust: negative propeller speed");
    return p.thrust_coeff * omega_p * omega_p;
}

double propeller_torque(double thrust, const VehicleParams& p) {
    if (thrust < 0.0) throw std::domain_error("propeller_torque: negative thrust");
    return p.torque_to_thrust * thrust;
}

BearingStep bearing_step(double motor_speed, double prop_speed, double dt,
                         const VehicleParams& p) {
    if (prop_speed < 0.0) throw std::domain_error("bearing_step: negative propeller speed");
    if (!(dt > 0.0)) throw std::domain_error("bearing_step: dt must be > 0");

    // Where the prop would end up this step if the clutch slipped: bearing
    // friction pulls it toward the shaft's speed magnitude, aero drag brakes.
    const double slip = std::fabs(motor_speed) - prop_speed;
    const double sign = slip > 0.0 ? 1.0 : (slip < 0.0 ? -1.0 : 0.0);
    const double friction = p.bearing_friction_torque * sign;
    const double drag = p.prop_drag_coeff * prop_speed * prop_speed;
    double coasted =
        std::max(0.0, prop_speed + dt * (friction - drag) / p.prop_inertia);
    if (slip > 0.0) {
        // Dry friction vanishes at zero slip: it can close the gap to the
        // shaft's speed magnitude within a step, never drag the prop past it.
        // (Braking stays unclamped; aero drag legitimately carries the prop
        // below the shaft speed toward the freewheel floor.)
        coasted = std::min(coasted, std::fabs(motor_speed));
    }

    BearingStep out;
    if (motor_speed >= coasted) {
        // Locked: the prop cannot coast away above the shaft, so the clutch
        // carries it and the shaft feels the prop's drag torque. Comparing
        // against the coasted speed rather than the current one keeps the
        // clutch from flickering open on rounding noise at steady hover,
        // where one slipping step would dump ~10 rad/s of prop speed.
        out.prop_speed = motor_speed;
        out.engaged = true;
        out.reaction_torque = propeller_torque(propeller_thrust(out.prop_speed, p), p);
        return out;
    }

    out.prop_speed = coasted;
    out.engaged = false;
    // Friction is the only coupling back to the shaft while slipping.
    out.reaction_torque = -friction;
    return out;
}

double drivetrain_wheel_speed(double omega_a, double omega_b,
                              const VehicleParams& p) {
    return (omega_b - omega_a) / (2.0 * p.reduction_k3);
}

bool traction_ok(double slope_deg, double mu) {
    return std::tan(slope_deg * M_PI / 180.0) <= mu;
}

bool traction_ok(double slope_deg, const VehicleParams& p) {
    return traction_ok(slope_deg, p.traction_mu);
}

}  // namespace quadrover

#include "quadrover/params.hpp"

#include <stdexcept>
#include <string>

namespace quadrover {

namespace {

void require(bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(std::string("VehicleParams: ") + what);
}

}  // namespace

void VehicleParams::validate() const {
    require(mass > 0.0, "mass must be > 0");
    require(inertia.x > 0.0 && inertia.y > 0.0 && inertia.z > 0.0,
            "inertia diagonal must be > 0");
    require(arm_length > 0.0, "arm_length must be > 0");
    require(torque_to_thrust > 0.0, "torque_to_thrust must be > 0");
    require(thrust_coeff > 0.0, "thrust_coeff must be > 0");
    require(omega_nat > 0.0, "omega_nat must be > 0");
    require(zeta > 0.0, "zeta must be > 0");
    require(accel_sat > 0.0, "accel_sat must be > 0");
    require(tau_att.x > 0.0 && tau_att.y > 0.0 && tau_att.z > 0.0,
            "tau_att entries must be > 0");
    require(tau_omega.x > 0.0 && tau_omega.y > 0.0 && tau_omega.z > 0.0,
            "tau_omega entries must be > 0");
    require(speed_gain_k1 > 0.0, "speed_gain_k1 must be > 0");
    require(track_gain_k2 > 0.0, "track_gain_k2 must be > 0");
    require(reduction_k3 > 0.0, "reduction_k3 must be > 0");
    require(wheel_idle_speed >= 0.0, "wheel_idle_speed must be >= 0");
    require(motor_speed_max > wheel_idle_speed,
            "motor_speed_max must exceed wheel_idle_speed");
    require(motor_time_constant > 0.0, "motor_time_constant must be > 0");
    require(bearing_friction_torque >= 0.0, "bearing_friction_torque must be >= 0");
    require(prop_inertia > 0.0, "prop_inertia must be > 0");
    require(prop_drag_coeff > 0.0, "prop_drag_coeff must be > 0");
    require(motor_efficiency > 0.0 && motor_efficiency <= 1.0,
            "motor_efficiency must be in (0, 1]");
    require(drive_efficiency > 0.0 && drive_efficiency <= 1.0,
            "drive_efficiency must be in (0, 1]");
    require(idle_power >= 0.0, "idle_power must be >= 0");
    require(rolling_resistance >= 0.0, "rolling_resistance must be >= 0");
    require(traction_mu > 0.0 && traction_mu < 2.0,
            "traction_mu must be in (0, 2)");
    require(transition_duration > 0.0, "transition_duration must be > 0");
}

}  // namespace quadrover

#include "quadrover/flight_controller.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace quadrover {

Vec3 position_control(const FlightSetpoint& sp, const Vec3& position,
                      const Vec3& velocity, const VehicleParams& p) {
    const Vec3 ep = sp.position - position;
    const Vec3 ev = sp.velocity - velocity;
    Vec3 a = sp.accel + p.omega_nat * p.omega_nat * ep +
             2.0 * p.zeta * p.omega_nat * ev;
    const double n = a.norm();
    if (n > p.accel_sat) a = a * (p.accel_sat / n);
    return a;
}

Vec3 attitude_control(const Vec3& a_tot, double yaw_des, const Mat3& attitude,
                      const Vec3& body_rates, const VehicleParams& p,
                      const Vec3& jerk) {
    const double n = a_tot.norm();
    if (n <= 0.1) {
        throw std::domain_error("attitude_control: total acceleration too small to define a thrust direction");
    }
    const Vec3 ahat = a_tot / n;
    const double beta = std::acos(std::clamp(ahat.z, -1.0, 1.0));
    if (beta > M_PI - 1e-6) {
        throw std::domain_error("attitude_control: demanded thrust points straight down");
    }

    // Tilt that carries body z onto the thrust direction, applied before yaw.
    const Vec3 nf = Vec3{0.0, 0.0, 1.0}.cross(ahat);
    Mat3 R_f;
    if (nf.norm() >= 1e-8) {
        R_f = axis_angle_to_matrix({nf.normalized(), beta});
    }
    const Mat3 R_des = R_f * yaw_matrix(yaw_des);

    const Vec3 e_R = matrix_to_rotvec(attitude.transposed() * R_des);
    Vec3 w_des{e_R.x / p.tau_att.x, e_R.y / p.tau_att.y, e_R.z / p.tau_att.z};

    // Rate of the desired thrust direction: ahat_dot = (I - ahat ahat^T) j / n,
    // whose angular velocity about the thrust axis' normal is ahat x ahat_dot.
    // Expressed in body axes and added as the rate setpoint's moving part.
    const Vec3 ahat_dot = jerk / n - ahat * (ahat.dot(jerk) / n);
    const Vec3 w_ff = attitude.transposed() * ahat.cross(ahat_dot);
    w_des = w_des + w_ff;

    return {(w_des.x - body_rates.x) / p.tau_omega.x,
            (w_des.y - body_rates.y) / p.tau_omega.y,
            (w_des.z - body_rates.z) / p.tau_omega.z};
}

ThrustTorque thrusts_and_torque(const Vec3& a_tot, const Vec3& alpha_des,
                                const VehicleParams& p) {
    ThrustTorque tt;
    tt.f_tot = p.mass * a_tot.norm();
    tt.tau = {p.inertia.x * alpha_des.x, p.inertia.y * alpha_des.y,
              p.inertia.z * alpha_des.z};
    return tt;
}

RotorThrusts mix(double f_tot, const Vec3& tau, const VehicleParams& p) {
    const double tx = tau.x / p.arm_length;
    const double ty = tau.y / p.arm_length;
    const double tz = tau.z / p.torque_to_thrust;

    RotorThrusts out;
    out.f[0] = 0.25 * (-tx - ty - tz + f_tot);
    out.f[1] = 0.25 * (-tx + ty + tz + f_tot);
    out.f[2] = 0.25 * (tx + ty - tz + f_tot);
    out.f[3] = 0.25 * (tx - ty + tz + f_tot);
    for (double& f : out.f) {
        if (f < 0.0) {
            f = 0.0;
            out.saturated = true;
        }
    }
    return out;
}

ThrustTorque allocation_wrench(const std::array<double, 4>& f,
                               const VehicleParams& p) {
    ThrustTorque tt;
    tt.tau.x = p.arm_length * (-f[0] - f[1] + f[2] + f[3]);
    tt.tau.y = p.arm_length * (-f[0] + f[1] + f[2] - f[3]);
    tt.tau.z = p.torque_to_thrust * (-f[0] + f[1] - f[2] + f[3]);
    tt.f_tot = f[0] + f[1] + f[2] + f[3];
    return tt;
}

ControlOutput flight_step(const FlightSetpoint& sp, const VehicleState& state,
                          const VehicleParams& p) {
    const Vec3 a_des = position_control(sp, state.position, state.velocity, p);
    const Vec3 a_tot = a_des + Vec3{0.0, 0.0, kGravity};
    const Vec3 alpha = attitude_control(a_tot, sp.yaw, state.attitude,
                                        state.body_rates, p, sp.jerk);
    const ThrustTorque tt = thrusts_and_torque(a_tot, alpha, p);
    const RotorThrusts rt = mix(tt.f_tot, tt.tau, p);

    ControlOutput out;
    out.saturated = rt.saturated;
    for (int i = 0; i < 4; ++i) {
        out.command.omega[i] = std::sqrt(rt.f[i] / p.thrust_coeff);
    }
    return out;
}

}  // namespace quadrover

#include "quadrover/power.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace quadrover {

double electrical_power_flight(const std::array<double, 4>& thrusts,
                               const VehicleParams& p) {
    double shaft = 0.0;
    for (double f : thrusts) {
        if (f < 0.0) throw std::domain_error("electrical_power_flight: negative thrust");
        if (f == 0.0) continue;
        // Shaft power = drag torque (k f) times prop speed sqrt(f / c_t).
        shaft += p.torque_to_thrust * f * std::sqrt(f / p.thrust_coeff);
    }
    return shaft / p.motor_efficiency;
}

double electrical_power_ground(double speed, double slope_deg, double accel,
                               const VehicleParams& p) {
    if (speed < 0.0) throw std::domain_error("electrical_power_ground: negative speed");
    const double theta = slope_deg * M_PI / 180.0;
    const double weight = p.mass * kGravity;
    const double force = weight * std::sin(theta) +
                         p.rolling_resistance * weight * std::cos(theta) +
                         p.mass * accel;
    const double drive = force * speed / p.drive_efficiency;
    return std::max(p.idle_power, p.idle_power + drive);
}

double calibrate_thrust_coeff(double hover_power_w, const VehicleParams& p) {
    if (!(hover_power_w > 0.0)) {
        throw std::domain_error("calibrate_thrust_coeff: hover power must be > 0");
    }
    return detail::hover_calibrated_ct(p.mass, p.torque_to_thrust,
                                       p.motor_efficiency, hover_power_w);
}

}  // namespace quadrover

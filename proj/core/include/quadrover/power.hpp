#pragma once

#include <array>

#include "quadrover/params.hpp"

namespace quadrover {

// Electrical power drawn in flight for the given per-rotor thrusts [W]:
// sum of shaft powers k * f_i * sqrt(f_i / c_t) divided by motor efficiency.
// Negative thrust is a domain error.
double electrical_power_flight(const std::array<double, 4>& thrusts,
                               const VehicleParams& p);

// Electrical power drawn driving at `speed` [m/s] up a slope [deg] while
// accelerating at `accel` [m/s^2] (magnitude of demanded acceleration).
// Grade, rolling resistance and inertial force are charged at the wheels and
// scaled by drive efficiency; the result never drops below idle_power.
double electrical_power_ground(double speed, double slope_deg, double accel,
                               const VehicleParams& p);

// Thrust coefficient that makes level hover draw hover_power_w. Uses the
// closed-form inversion of the flight power model at f = m g / 4 per rotor.
double calibrate_thrust_coeff(double hover_power_w, const VehicleParams& p);

}  // namespace quadrover

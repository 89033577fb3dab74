#pragma once

#include <array>
#include <stdexcept>
#include <string>

#include "quadrover/actuation.hpp"
#include "quadrover/rotation.hpp"
#include "quadrover/vec3.hpp"

namespace quadrover {

enum class Mode { Flight, Ground, TransitionToFlight, TransitionToGround };

inline const char* mode_name(Mode m) {
    switch (m) {
        case Mode::Flight: return "flight";
        case Mode::Ground: return "ground";
        case Mode::TransitionToFlight: return "to_flight";
        case Mode::TransitionToGround: return "to_ground";
    }
    return "?";
}

inline Mode mode_from_name(const std::string& s) {
    if (s == "flight") return Mode::Flight;
    if (s == "ground") return Mode::Ground;
    if (s == "to_flight") return Mode::TransitionToFlight;
    if (s == "to_ground") return Mode::TransitionToGround;
    throw std::invalid_argument("unknown mode name: " + s);
}

// Signed motor shaft speed setpoints [rad/s]. Positive spins the propeller
// side; negative drives the wheels through the differential.
struct MotorCommand {
    std::array<double, 4> omega{};
};

// Forward-positive wheel speeds [rad/s].
struct WheelSpeeds {
    double right{0.0};
    double left{0.0};
};

// Full simulation state. World frame is z-up; attitude maps body to world.
struct VehicleState {
    double time{0.0};
    Mode mode{Mode::Ground};
    Vec3 position{};         // [m]
    Vec3 velocity{};         // [m/s]
    Mat3 attitude{};         // world-from-body rotation
    Vec3 body_rates{};       // [rad/s] in body frame
    ActuatorState actuators{};
    WheelSpeeds wheels{};
    bool on_ground{true};
    double energy_used{0.0}; // accumulated electrical energy [J]
};

// Controller output for one step: the motor setpoints plus whether any
// saturation (thrust clipping, wheel redline) was applied producing them.
struct ControlOutput {
    MotorCommand command{};
    bool saturated{false};
};

}  // namespace quadrover

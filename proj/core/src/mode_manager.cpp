#include "quadrover/mode_manager.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace quadrover {

Mode request_mode(Mode current, Mode target) {
    if (target != Mode::Flight && target != Mode::Ground) {
        throw std::domain_error("request_mode: target must be Flight or Ground");
    }
    switch (current) {
        case Mode::Flight:
            return target == Mode::Flight ? Mode::Flight : Mode::TransitionToGround;
        case Mode::Ground:
            return target == Mode::Ground ? Mode::Ground : Mode::TransitionToFlight;
        case Mode::TransitionToFlight:
            // Opposite request flips the transition; same-direction is a no-op.
            return target == Mode::Flight ? Mode::TransitionToFlight
                                          : Mode::TransitionToGround;
        case Mode::TransitionToGround:
            return target == Mode::Ground ? Mode::TransitionToGround
                                          : Mode::TransitionToFlight;
    }
    return current;
}

MotorCommand transition_ramp(const MotorCommand& source, const MotorCommand& target,
                             double elapsed, double duration) {
    if (!(duration > 0.0)) throw std::domain_error("transition_ramp: duration must be > 0");
    const double a = std::clamp(elapsed / duration, 0.0, 1.0);
    MotorCommand out;
    for (int i = 0; i < 4; ++i) {
        out.omega[i] = source.omega[i] + a * (target.omega[i] - source.omega[i]);
    }
    return out;
}

bool ModeManager::request(Mode target, const VehicleState& state,
                          const VehicleParams& p) {
    const Mode next = request_mode(mode_, target);
    if (next == mode_) return false;

    if (next == Mode::TransitionToFlight && mode_ == Mode::Ground &&
        !state.on_ground) {
        // Can only spin the props up for takeoff from a resting vehicle.
        return false;
    }
    if (next == Mode::TransitionToGround && mode_ == Mode::Flight) {
        const bool settled = std::fabs(state.velocity.z) < 0.2 &&
                             state.position.z < 0.05;
        if (!settled) return false;
    }

    const Mode source = mode_;
    mode_ = next;
    status_ = TransitionStatus{source, target, 0.0, p.transition_duration};
    // Ramp from wherever the shafts actually are, also when superseding.
    source_cmd_.omega = state.actuators.motor_speed;
    return true;
}

MotorCommand ModeManager::step(const MotorCommand& target_cmd, double dt) {
    if (!in_transition()) return target_cmd;
    status_.elapsed += dt;
    const MotorCommand out = transition_ramp(source_cmd_, target_cmd,
                                             status_.elapsed, status_.duration);
    if (status_.elapsed >= status_.duration) {
        mode_ = status_.target;
    }
    return out;
}

}  // namespace quadrover

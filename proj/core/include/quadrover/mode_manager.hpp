#pragma once

#include "quadrover/params.hpp"
#include "quadrover/state.hpp"

namespace quadrover {

// Progress of an in-flight mode change.
struct TransitionStatus {
    Mode source{Mode::Ground};
    Mode target{Mode::Flight};
    double elapsed{0.0};   // [s]
    double duration{0.1};  // [s]
};

// Pure mode edge: which mode does a request for `target` put us in?
// Same-mode requests are no-ops; a request opposite to a running transition
// supersedes it (the caller restarts the ramp from the current motor state).
// Requesting a transition mode directly is a domain error.
Mode request_mode(Mode current, Mode target);

// Linear per-motor interpolation from the frozen source commands toward the
// target commands at elapsed/duration (clipped to 1).
MotorCommand transition_ramp(const MotorCommand& source, const MotorCommand& target,
                             double elapsed, double duration);

// Owns the current mode and any running ramp. Requests are interlocked
// against vehicle state: lifting off requires ground contact; settling onto
// the wheels requires near-zero height and descent rate.
class ModeManager {
  public:
    explicit ModeManager(Mode initial) : mode_(initial) {}

    Mode mode() const { return mode_; }
    bool in_transition() const {
        return mode_ == Mode::TransitionToFlight || mode_ == Mode::TransitionToGround;
    }
    const TransitionStatus& status() const { return status_; }

    // Returns true when the request was accepted (mode changed).
    bool request(Mode target, const VehicleState& state, const VehicleParams& p);

    // Advances the ramp by dt and returns the blended command. `target_cmd`
    // is the live output of the target mode's controller, so the ramp lands
    // exactly on it when elapsed reaches duration and the mode flips.
    MotorCommand step(const MotorCommand& target_cmd, double dt);

  private:
    Mode mode_;
    TransitionStatus status_{};
    MotorCommand source_cmd_{};
};

}  // namespace quadrover

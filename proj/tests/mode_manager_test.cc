#include <gtest/gtest.h>

#include <cmath>
#include <stdexcept>

#include "quadrover/mode_manager.hpp"

using namespace quadrover;

namespace {
const VehicleParams kP = VehicleParams::defaults();

VehicleState resting_state() {
    VehicleState s;
    s.mode = Mode::Ground;
    s.on_ground = true;
    for (int i = 0; i < 4; ++i) s.actuators.motor_speed[i] = -kP.wheel_idle_speed;
    return s;
}

VehicleState flying_state(double z, double vz) {
    VehicleState s;
    s.mode = Mode::Flight;
    s.on_ground = false;
    s.position.z = z;
    s.velocity.z = vz;
    for (int i = 0; i < 4; ++i) s.actuators.motor_speed[i] = 792.0;
    return s;
}
}  // namespace

TEST(RequestMode, EdgesFromSteadyModes) {
    EXPECT_EQ(request_mode(Mode::Ground, Mode::Ground), Mode::Ground);
    EXPECT_EQ(request_mode(Mode::Ground, Mode::Flight), Mode::TransitionToFlight);
    EXPECT_EQ(request_mode(Mode::Flight, Mode::Flight), Mode::Flight);
    EXPECT_EQ(request_mode(Mode::Flight, Mode::Ground), Mode::TransitionToGround);
}

TEST(RequestMode, OppositeRequestSupersedesARunningTransition) {
    EXPECT_EQ(request_mode(Mode::TransitionToFlight, Mode::Ground),
              Mode::TransitionToGround);
    EXPECT_EQ(request_mode(Mode::TransitionToGround, Mode::Flight),
              Mode::TransitionToFlight);
    // Same-direction requests change nothing.
    EXPECT_EQ(request_mode(Mode::TransitionToFlight, Mode::Flight),
              Mode::TransitionToFlight);
    EXPECT_EQ(request_mode(Mode::TransitionToGround, Mode::Ground),
              Mode::TransitionToGround);
}

TEST(RequestMode, TransitionTargetsAreInvalid) {
    EXPECT_THROW(request_mode(Mode::Ground, Mode::TransitionToFlight),
                 std::domain_error);
    EXPECT_THROW(request_mode(Mode::Flight, Mode::TransitionToGround),
                 std::domain_error);
}

TEST(TransitionRamp, LinearBlendAndClipping) {
    MotorCommand src, dst;
    for (int i = 0; i < 4; ++i) {
        src.omega[i] = -150.0;
        dst.omega[i] = 790.0;
    }
    const MotorCommand mid = transition_ramp(src, dst, 0.05, 0.1);
    for (double w : mid.omega) EXPECT_NEAR(w, (790.0 - 150.0) / 2.0, 1e-12);
    const MotorCommand before = transition_ramp(src, dst, -1.0, 0.1);
    for (double w : before.omega) EXPECT_DOUBLE_EQ(w, -150.0);
    const MotorCommand after = transition_ramp(src, dst, 0.2, 0.1);
    for (double w : after.omega) EXPECT_DOUBLE_EQ(w, 790.0);
    EXPECT_THROW(transition_ramp(src, dst, 0.0, 0.0), std::domain_error);
}

TEST(ModeManager, LiftoffRequestNeedsGroundContact) {
    ModeManager mm(Mode::Ground);
    VehicleState airborne = resting_state();
    airborne.on_ground = false;
    EXPECT_FALSE(mm.request(Mode::Flight, airborne, kP));
    EXPECT_EQ(mm.mode(), Mode::Ground);

    EXPECT_TRUE(mm.request(Mode::Flight, resting_state(), kP));
    EXPECT_EQ(mm.mode(), Mode::TransitionToFlight);
    EXPECT_TRUE(mm.in_transition());
    EXPECT_EQ(mm.status().source, Mode::Ground);
    EXPECT_EQ(mm.status().target, Mode::Flight);
    EXPECT_DOUBLE_EQ(mm.status().duration, kP.transition_duration);
}

TEST(ModeManager, LandingRequestNeedsToBeSettled) {
    ModeManager mm(Mode::Flight);
    EXPECT_FALSE(mm.request(Mode::Ground, flying_state(1.0, 0.0), kP));
    EXPECT_FALSE(mm.request(Mode::Ground, flying_state(0.03, -0.5), kP));
    EXPECT_TRUE(mm.request(Mode::Ground, flying_state(0.03, -0.1), kP));
    EXPECT_EQ(mm.mode(), Mode::TransitionToGround);
}

TEST(ModeManager, SameModeRequestIsRejected) {
    ModeManager mm(Mode::Ground);
    EXPECT_FALSE(mm.request(Mode::Ground, resting_state(), kP));
}

TEST(ModeManager, RampCompletesInExactlyTheConfiguredSteps) {
    ModeManager mm(Mode::Ground);
    ASSERT_TRUE(mm.request(Mode::Flight, resting_state(), kP));

    MotorCommand target;
    for (int i = 0; i < 4; ++i) target.omega[i] = 790.0;

    const double dt = 0.002;
    int steps = 0;
    while (mm.in_transition() && steps < 1000) {
        const MotorCommand out = mm.step(target, dt);
        ++steps;
        // The blend stays between the frozen source and the live target.
        for (double w : out.omega) {
            EXPECT_GE(w, -kP.wheel_idle_speed - 1e-9);
            EXPECT_LE(w, 790.0 + 1e-9);
        }
    }
    EXPECT_EQ(mm.mode(), Mode::Flight);
    // 50 steps of 2 ms, +-1 step for accumulated rounding in `elapsed`.
    EXPECT_NEAR(steps * dt, kP.transition_duration, dt + 1e-12);
}

TEST(ModeManager, RampLandsExactlyOnTheTargetCommand) {
    ModeManager mm(Mode::Ground);
    ASSERT_TRUE(mm.request(Mode::Flight, resting_state(), kP));
    MotorCommand target;
    for (int i = 0; i < 4; ++i) target.omega[i] = 780.0 + i;
    MotorCommand out;
    while (mm.in_transition()) out = mm.step(target, 0.01);
    for (int i = 0; i < 4; ++i) EXPECT_DOUBLE_EQ(out.omega[i], target.omega[i]);
}

TEST(ModeManager, StepPassesThroughOutsideTransitions) {
    ModeManager mm(Mode::Flight);
    MotorCommand target;
    target.omega = {1.0, 2.0, 3.0, 4.0};
    const MotorCommand out = mm.step(target, 0.002);
    for (int i = 0; i < 4; ++i) EXPECT_DOUBLE_EQ(out.omega[i], target.omega[i]);
}

TEST(ModeManager, SupersedingRestartsFromCurrentShaftSpeeds) {
    ModeManager mm(Mode::Ground);
    VehicleState s = resting_state();
    ASSERT_TRUE(mm.request(Mode::Flight, s, kP));
    MotorCommand up;
    for (int i = 0; i < 4; ++i) up.omega[i] = 790.0;
    mm.step(up, 0.04);  // partway up the ramp

    // Abort: shafts are somewhere mid-reversal; ramp must restart from there.
    for (int i = 0; i < 4; ++i) s.actuators.motor_speed[i] = 200.0;
    ASSERT_TRUE(mm.request(Mode::Ground, s, kP));
    EXPECT_EQ(mm.mode(), Mode::TransitionToGround);
    EXPECT_DOUBLE_EQ(mm.status().elapsed, 0.0);

    MotorCommand down;
    for (int i = 0; i < 4; ++i) down.omega[i] = -150.0;
    const MotorCommand first = mm.step(down, 0.002);
    for (double w : first.omega) {
        EXPECT_NEAR(w, 200.0 + (0.002 / 0.1) * (-150.0 - 200.0), 1e-9);
    }
}

#include "quadrover/runner.hpp"

#include <cmath>
#include <stdexcept>

#include "quadrover/flight_controller.hpp"
#include "quadrover/ground_controller.hpp"
#include "quadrover/metrics.hpp"
#include "quadrover/mode_manager.hpp"
#include "quadrover/simulator.hpp"

namespace quadrover {

namespace {

// Ideal rigid pose following the commanded twists exactly; the ground
// tracking error is measured against this.
struct GroundReference {
    Vec3 position{};
    double yaw{0.0};

    void advance(const GroundSetpoint& sp, double dt, const Terrain& terrain) {
        yaw += sp.omega_z * dt;
        const double theta = terrain.slope_deg * M_PI / 180.0;
        position.x += sp.v_x * std::cos(yaw) * std::cos(theta) * dt;
        position.y += sp.v_x * std::sin(yaw) * dt;
        position.z = terrain.height_at(position.x);
    }
};

TelemetryRecord make_record(const VehicleState& s, const MotorCommand& cmd,
                            double power, double err, bool slip, bool sat,
                            bool mode_change) {
    TelemetryRecord r;
    r.t = round_sig9(s.time);
    r.mode = s.mode;
    r.position = {round_sig9(s.position.x), round_sig9(s.position.y),
                  round_sig9(s.position.z)};
    r.velocity = {round_sig9(s.velocity.x), round_sig9(s.velocity.y),
                  round_sig9(s.velocity.z)};
    r.yaw = round_sig9(yaw_of(s.attitude));
    for (int i = 0; i < 4; ++i) {
        r.motor_cmd[i] = round_sig9(cmd.omega[i]);
        r.motor_speed[i] = round_sig9(s.actuators.motor_speed[i]);
        r.prop_speed[i] = round_sig9(s.actuators.prop_speed[i]);
    }
    r.wheel_right = round_sig9(s.wheels.right);
    r.wheel_left = round_sig9(s.wheels.left);
    r.power_w = round_sig9(power);
    r.energy_j = round_sig9(s.energy_used);
    r.tracking_error_m = round_sig9(err);
    r.flag_slip = slip;
    r.flag_saturation = sat;
    r.flag_mode_change = mode_change;
    return r;
}

}  // namespace

VehicleState initial_state(const Scenario& scenario, const VehicleParams& p) {
    VehicleState s;
    if (scenario.ground) {
        s.mode = Mode::Ground;
        s.on_ground = true;
        for (int i = 0; i < 4; ++i) {
            s.actuators.motor_speed[i] = -p.wheel_idle_speed;
            // Props sit at the freewheel balance point where bearing drag
            // feeds exactly what aero drag takes.
            s.actuators.prop_speed[i] =
                std::sqrt(p.bearing_friction_torque / p.prop_drag_coeff);
            s.actuators.engaged[i] = false;
        }
        return s;
    }

    // Trimmed hover at the first sample of the reference.
    const TrajectorySample sp = ScenarioSampler(scenario).at(0.0);
    s.mode = Mode::Flight;
    s.on_ground = false;
    s.position = sp.flight.position;
    s.velocity = sp.flight.velocity;
    s.attitude = yaw_matrix(sp.flight.yaw);
    const double hover = std::sqrt(p.mass * kGravity / (4.0 * p.thrust_coeff));
    for (int i = 0; i < 4; ++i) {
        s.actuators.motor_speed[i] = hover;
        s.actuators.prop_speed[i] = hover;
        s.actuators.engaged[i] = true;
    }
    return s;
}

RunResult run_scenario(const Scenario& scenario, const VehicleParams& p,
                       const RunOptions& opt) {
    if (!(opt.dt > 0.0) || opt.dt > 0.01) {
        throw std::domain_error("run_scenario: dt must be in (0, 0.01] s");
    }
    if (opt.telemetry_interval < opt.dt) {
        throw std::domain_error("run_scenario: telemetry interval must be >= dt");
    }
    p.validate();

    const ScenarioSampler sampler(scenario);
    VehicleState state = initial_state(scenario, p);
    ModeManager manager(state.mode);
    GroundReference ref;

    RunResult out;
    const long steps = std::lround(scenario.duration / opt.dt);
    const long record_every =
        std::max(1L, std::lround(opt.telemetry_interval / opt.dt));
    size_t next_event = 0;

    bool acc_slip = false, acc_sat = false, acc_mode_change = false;
    long last_emit = 0;

    for (long k = 1; k <= steps; ++k) {
        const double t_prev = double(k - 1) * opt.dt;
        const Mode mode_before = manager.mode();

        while (next_event < scenario.mode_events.size() &&
               scenario.mode_events[next_event].t <= t_prev + 1e-12) {
            manager.request(scenario.mode_events[next_event].target, state, p);
            ++next_event;
        }

        const TrajectorySample sample = sampler.at(t_prev);
        ControlOutput ctl;
        switch (manager.mode()) {
            case Mode::Ground:
                ctl = ground_step(sample.twist, p);
                break;
            case Mode::Flight:
                ctl = flight_step(sample.flight, state, p);
                break;
            case Mode::TransitionToFlight: {
                const ControlOutput target = flight_step(sample.flight, state, p);
                ctl.command = manager.step(target.command, opt.dt);
                ctl.saturated = target.saturated;
                break;
            }
            case Mode::TransitionToGround: {
                const ControlOutput target = ground_step(sample.twist, p);
                ctl.command = manager.step(target.command, opt.dt);
                ctl.saturated = target.saturated;
                break;
            }
        }

        // Plant: the ground kinematics only while fully in Ground mode;
        // transitions run the contact-aware flight dynamics.
        bool slip = false;
        double power;
        if (manager.mode() == Mode::Ground) {
            GroundStepResult g = step_ground(state, ctl.command, opt.dt,
                                             scenario.terrain, p);
            power = (g.state.energy_used - state.energy_used) / opt.dt;
            slip = g.slip;
            state = g.state;
        } else {
            VehicleState next = step_flight(state, ctl.command, opt.dt, p);
            power = (next.energy_used - state.energy_used) / opt.dt;
            state = next;
        }
        state.mode = manager.mode();

        const double t = double(k) * opt.dt;

        // Tracking error against the reference for the now-current time.
        const TrajectorySample ref_sample = sampler.at(t);
        double err;
        if (ref_sample.ground) {
            ref.advance(sample.twist, opt.dt, scenario.terrain);
            err = (state.position - ref.position).norm();
        } else {
            err = (state.position - ref_sample.flight.position).norm();
        }

        out.steps_total += 1;
        out.steps_saturated += ctl.saturated ? 1 : 0;
        acc_slip = acc_slip || slip;
        acc_sat = acc_sat || ctl.saturated;
        acc_mode_change = acc_mode_change || (manager.mode() != mode_before);

        bool done = false;
        if (slip) {
            out.status = RunStatus::Slip;
            out.diagnostic = "wheel slip: traction lost on slope";
            done = true;
        } else if (scenario.kind == ScenarioKind::SlopeClimb &&
                   state.position.z >= scenario.height_gain) {
            done = true;
        } else if (scenario.kind == ScenarioKind::SlopeClimb && k == steps) {
            out.status = RunStatus::Timeout;
            out.diagnostic = "time budget exhausted before reaching target height";
            done = true;
        }

        if (k % record_every == 0 || (done && k != last_emit)) {
            out.records.push_back(make_record(state, ctl.command, power, err,
                                              acc_slip, acc_sat, acc_mode_change));
            acc_slip = acc_sat = acc_mode_change = false;
            last_emit = k;
        }
        if (done) break;
    }
    return out;
}

}  // namespace quadrover

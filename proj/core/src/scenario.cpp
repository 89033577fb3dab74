#include "quadrover/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace quadrover {

namespace {

constexpr int kThetaGrid = 8192;  // arc-length table resolution per cycle

// Gerono lemniscate x = A sin(theta), y = (A/2) sin(2 theta).
// ds/dtheta = A sqrt(cos^2 theta + cos^2 2theta).
double gerono_speed_factor(double theta) {
    const double c1 = std::cos(theta);
    const double c2 = std::cos(2.0 * theta);
    return std::sqrt(c1 * c1 + c2 * c2);
}

}  // namespace

ScenarioSampler::ScenarioSampler(const Scenario& sc) : sc_(sc) {
    if (sc_.kind != ScenarioKind::Figure8) return;

    const double A = sc_.major_diameter / 2.0;
    // The lemniscate is traversed at constant parameter rate, sized so the
    // peak path speed (reached at the center crossings, where |r'| = A sqrt 2)
    // equals the requested speed. Constant-rate traversal keeps the sharp
    // curvature spikes near the lobe corners slow: the same path at constant
    // 2 m/s path speed would demand > 25 m/s^2 laterally, beyond accel_sat.
    theta_rate_ = sc_.speed / (A * std::sqrt(2.0));
    cycle_time_ = 2.0 * M_PI / theta_rate_;

    // Path length per cycle by trapezoid quadrature on ds/dtheta.
    const double dtheta = 2.0 * M_PI / kThetaGrid;
    double arc = 0.0;
    for (int i = 1; i <= kThetaGrid; ++i) {
        const double a = (i - 1) * dtheta;
        const double b = i * dtheta;
        arc += 0.5 * A * (gerono_speed_factor(a) + gerono_speed_factor(b)) * dtheta;
    }
    cycle_length_ = arc;
}

TrajectorySample ScenarioSampler::at(double t) const {
    TrajectorySample s;
    switch (sc_.kind) {
        case ScenarioKind::Hover: {
            s.flight.position = {0.0, 0.0, sc_.altitude};
            return s;
        }
        case ScenarioKind::Circle: {
            if (sc_.ground) {
                s.ground = true;
                s.twist = {sc_.speed, sc_.speed / sc_.radius};
                return s;
            }
            const double w = sc_.speed / sc_.radius;
            const double a = w * t;
            s.flight.position = {sc_.radius * std::cos(a), sc_.radius * std::sin(a),
                                 sc_.altitude};
            s.flight.velocity = {-sc_.speed * std::sin(a), sc_.speed * std::cos(a), 0.0};
            const double cp = sc_.speed * w;  // centripetal magnitude
            s.flight.accel = {-cp * std::cos(a), -cp * std::sin(a), 0.0};
            s.flight.jerk = {cp * w * std::sin(a), -cp * w * std::cos(a), 0.0};
            return s;
        }
        case ScenarioKind::Figure8: {
            const double A = sc_.major_diameter / 2.0;
            const double w = theta_rate_;
            const double th = w * t;
            // x and y are plain sinusoids at w and 2w, so every derivative
            // the controller feeds forward is exact.
            s.flight.position = {A * std::sin(th), 0.5 * A * std::sin(2.0 * th),
                                 sc_.altitude};
            s.flight.velocity = {A * w * std::cos(th), A * w * std::cos(2.0 * th), 0.0};
            const double w2 = w * w;
            s.flight.accel = {-A * w2 * std::sin(th), -2.0 * A * w2 * std::sin(2.0 * th),
                              0.0};
            s.flight.jerk = {-A * w2 * w * std::cos(th),
                             -4.0 * A * w2 * w * std::cos(2.0 * th), 0.0};
            return s;
        }
        case ScenarioKind::SquarePath:
        case ScenarioKind::SlopeClimb: {
            s.ground = true;
            s.twist = {};
            for (const GroundPhase& ph : sc_.phases) {
                if (t < ph.t_end) {
                    s.twist = ph.twist;
                    break;
                }
            }
            return s;
        }
        case ScenarioKind::Transition: {
            const bool flying = !sc_.mode_events.empty() && t >= sc_.mode_events.front().t;
            if (flying) {
                s.flight.position = sc_.hover_point;
                return s;
            }
            s.ground = true;
            for (const GroundPhase& ph : sc_.phases) {
                if (t < ph.t_end) {
                    s.twist = ph.twist;
                    break;
                }
            }
            return s;
        }
    }
    return s;
}

Scenario gen_hover(double duration, double altitude) {
    if (duration < 0.0) throw std::invalid_argument("gen_hover: duration must be >= 0");
    Scenario sc;
    sc.kind = ScenarioKind::Hover;
    sc.duration = duration;
    sc.altitude = altitude;
    return sc;
}

Scenario gen_circle(double radius, double speed, double duration, bool ground) {
    if (radius <= 0.0) throw std::invalid_argument("gen_circle: radius must be > 0");
    if (speed < 0.0) throw std::invalid_argument("gen_circle: speed must be >= 0");
    Scenario sc;
    sc.kind = ScenarioKind::Circle;
    sc.ground = ground;
    sc.radius = radius;
    sc.speed = speed;
    sc.duration = duration;
    return sc;
}

Scenario gen_figure8(double major_diameter, double speed, int cycles) {
    if (major_diameter <= 0.0) throw std::invalid_argument("gen_figure8: diameter must be > 0");
    if (speed <= 0.0) throw std::invalid_argument("gen_figure8: speed must be > 0");
    if (cycles < 1) throw std::invalid_argument("gen_figure8: cycles must be >= 1");
    Scenario sc;
    sc.kind = ScenarioKind::Figure8;
    sc.major_diameter = major_diameter;
    sc.speed = speed;
    sc.cycles = cycles;
    sc.duration = ScenarioSampler(sc).cycle_time() * cycles;
    return sc;
}

Scenario gen_square_path(double side, double segment_time, double turn_time) {
    if (side < 0.0) throw std::invalid_argument("gen_square_path: side must be >= 0");
    if (segment_time <= 0.0 || turn_time <= 0.0) {
        throw std::invalid_argument("gen_square_path: durations must be > 0");
    }
    Scenario sc;
    sc.kind = ScenarioKind::SquarePath;
    sc.ground = true;
    sc.speed = side / segment_time;
    const GroundSetpoint drive{side / segment_time, 0.0};
    const GroundSetpoint turn{0.0, (M_PI / 2.0) / turn_time};
    double t = 0.0;
    for (int leg = 0; leg < 4; ++leg) {
        t += segment_time;
        sc.phases.push_back({t, drive});
        if (leg < 3) {
            t += turn_time;
            sc.phases.push_back({t, turn});
        }
    }
    sc.duration = t;
    return sc;
}

Scenario gen_slope_climb(double slope_deg, double speed, double height_gain) {
    if (!(slope_deg > 0.0 && slope_deg < 45.0)) {
        throw std::invalid_argument("gen_slope_climb: slope must be in (0, 45) deg");
    }
    if (speed <= 0.0) throw std::invalid_argument("gen_slope_climb: speed must be > 0");
    if (height_gain <= 0.0) throw std::invalid_argument("gen_slope_climb: height gain must be > 0");
    Scenario sc;
    sc.kind = ScenarioKind::SlopeClimb;
    sc.ground = true;
    sc.speed = speed;
    sc.height_gain = height_gain;
    sc.terrain.slope_deg = slope_deg;
    const double theta = slope_deg * M_PI / 180.0;
    // Keep ramp well past the target height so completion happens on-slope.
    sc.terrain.extent = 2.0 * height_gain / std::tan(theta);
    const double ideal = height_gain / (speed * std::sin(theta));
    sc.duration = 1.5 * ideal + 1.0;
    sc.phases.push_back({sc.duration, GroundSetpoint{speed, 0.0}});
    return sc;
}

Scenario gen_transition(double speed, double switch_time, double hover_height,
                        double duration) {
    if (speed < 0.0) throw std::invalid_argument("gen_transition: speed must be >= 0");
    if (switch_time <= 0.0 || duration <= switch_time) {
        throw std::invalid_argument("gen_transition: need 0 < switch_time < duration");
    }
    Scenario sc;
    sc.kind = ScenarioKind::Transition;
    sc.ground = true;
    sc.speed = speed;
    sc.duration = duration;
    const double drive_time = std::max(0.0, switch_time - 0.3);
    sc.phases.push_back({drive_time, GroundSetpoint{speed, 0.0}});
    sc.phases.push_back({duration, GroundSetpoint{}});
    sc.mode_events.push_back({switch_time, Mode::Flight});
    sc.hover_point = {speed * drive_time, 0.0, hover_height};
    return sc;
}

}  // namespace quadrover

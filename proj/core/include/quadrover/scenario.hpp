#pragma once

#include <vector>

#include "quadrover/flight_controller.hpp"
#include "quadrover/ground_controller.hpp"
#include "quadrover/simulator.hpp"
#include "quadrover/state.hpp"

namespace quadrover {

enum class ScenarioKind { Hover, Circle, Figure8, SquarePath, SlopeClimb, Transition };

// Piecewise-constant ground command, active while t < t_end.
struct GroundPhase {
    double t_end{0.0};
    GroundSetpoint twist{};
};

// Scheduled mode request.
struct ModeEvent {
    double t{0.0};
    Mode target{Mode::Flight};
};

struct Scenario {
    ScenarioKind kind{ScenarioKind::Hover};
    double duration{5.0};        // [s] time budget; completion can end a run early
    bool ground{false};          // vehicle starts (and mostly stays) on wheels
    double radius{0.5};          // circle [m]
    double speed{1.0};           // path speed [m/s]
    int cycles{3};               // figure8 repetitions
    double major_diameter{1.5};  // figure8 [m]
    double altitude{1.0};        // flight height [m]
    double height_gain{0.5};     // slope climb target [m]
    Terrain terrain{};
    std::vector<GroundPhase> phases;      // ground command schedule
    std::vector<ModeEvent> mode_events;   // scripted mode switches
    Vec3 hover_point{};                   // flight hold point after a switch
};

// What the active controller should chase at time t.
struct TrajectorySample {
    bool ground{false};
    FlightSetpoint flight{};
    GroundSetpoint twist{};
};

// Evaluates a scenario's reference at arbitrary times. For the figure-8 this
// fixes the parameter rate so the peak path speed matches the request, and
// measures the cycle arc length by quadrature.
class ScenarioSampler {
  public:
    explicit ScenarioSampler(const Scenario& sc);

    TrajectorySample at(double t) const;

    // Figure-8 geometry (defined only for Figure8 scenarios).
    double cycle_time() const { return cycle_time_; }
    double cycle_length() const { return cycle_length_; }

  private:
    Scenario sc_;
    double theta_rate_{0.0};  // [rad/s]
    double cycle_time_{0.0};
    double cycle_length_{0.0};
};

Scenario gen_hover(double duration, double altitude = 1.0);
Scenario gen_circle(double radius, double speed, double duration, bool ground = false);
Scenario gen_figure8(double major_diameter, double speed, int cycles);
Scenario gen_square_path(double side = 0.75, double segment_time = 1.5,
                         double turn_time = 1.0);
Scenario gen_slope_climb(double slope_deg, double speed, double height_gain);
Scenario gen_transition(double speed = 0.5, double switch_time = 2.3,
                        double hover_height = 0.25, double duration = 6.0);

}  // namespace quadrover

#pragma once

#include "quadrover/params.hpp"
#include "quadrover/state.hpp"

namespace quadrover {

// Ground surface: a plane through the origin rising along +x at slope_deg for
// x in [0, extent], flat beyond. mu < 0 means "use params.traction_mu".
struct Terrain {
    double slope_deg{0.0};
    double extent{1e9};   // [m] along world x
    double mu{-1.0};

    double height_at(double x) const;
    double friction(const VehicleParams& p) const {
        return mu >= 0.0 ? mu : p.traction_mu;
    }
};

// One flight-dynamics step (semi-implicit Euler). Motors follow the command
// through a first-order lag, props through the one-way bearings; every
// spinning prop lifts, while drag torque about body z flows only through
// engaged bearings. While resting on the staging plane (z = 0) the body
// stays frozen until collective thrust exceeds weight; descending through
// z = 0 lands it (velocity zeroed, attitude flattened to its yaw).
// dt outside (0, 0.01] is a domain error.
VehicleState step_flight(const VehicleState& state, const MotorCommand& cmd,
                         double dt, const VehicleParams& p);

struct GroundStepResult {
    VehicleState state;
    bool slip{false};
};

// One driving step. Wheels follow from the signed motor speeds through the
// differential, the body moves kinematically along the terrain surface, props
// freewheel. On a slope steeper than the friction cone the wheels slip:
// no translation, flag set. dt outside (0, 0.01] is a domain error.
GroundStepResult step_ground(const VehicleState& state, const MotorCommand& cmd,
                             double dt, const Terrain& terrain,
                             const VehicleParams& p);

}  // namespace quadrover

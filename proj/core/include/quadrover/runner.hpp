#pragma once

#include <string>
#include <vector>

#include "quadrover/params.hpp"
#include "quadrover/scenario.hpp"
#include "quadrover/telemetry.hpp"

namespace quadrover {

enum class RunStatus { Ok, Slip, Timeout };

inline const char* run_status_name(RunStatus s) {
    switch (s) {
        case RunStatus::Ok: return "ok";
        case RunStatus::Slip: return "slip";
        case RunStatus::Timeout: return "timeout";
    }
    return "?";
}

struct RunOptions {
    double dt{0.002};                // [s] control and integration step
    double telemetry_interval{0.01}; // [s] record spacing
};

struct RunResult {
    std::vector<TelemetryRecord> records;
    RunStatus status{RunStatus::Ok};
    std::string diagnostic;
    long steps_total{0};
    long steps_saturated{0};  // steps whose controller output was clipped
};

// Vehicle state a scenario starts from: resting on the wheels at idle for
// ground scenarios, trimmed hover at the first sample for flight scenarios.
VehicleState initial_state(const Scenario& scenario, const VehicleParams& p);

// Fixed-step closed-loop run: controller every step, telemetry every
// interval, sticky flags between records. Deterministic for identical inputs.
RunResult run_scenario(const Scenario& scenario, const VehicleParams& p,
                       const RunOptions& opt = {});

}  // namespace quadrover

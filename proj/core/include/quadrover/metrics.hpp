#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "quadrover/scenario.hpp"
#include "quadrover/telemetry.hpp"

namespace quadrover {

// Gravity reference for the lateral-g metric only [m/s^2].
inline constexpr double kStandardG = 9.80665;

// Scenario summary numbers. NaN marks metrics the scenario kind does not
// define (the JSON writer omits those).
struct MetricsReport {
    double rmse_m{};
    double mean_power_w{};
    double energy_per_height_j_per_m{};
    double lateral_g{};
    double transition_time_s{};
    bool slip_occurred{false};

    MetricsReport();
};

// Derives the report from a telemetry sequence. Throws std::invalid_argument
// on empty telemetry and std::domain_error when a slope run gained no height
// without slipping (energy/height undefined).
MetricsReport compute_metrics(const std::vector<TelemetryRecord>& records,
                              const Scenario& scenario);

void write_metrics_json(std::ostream& os, const MetricsReport& report,
                        const std::string& status);

}  // namespace quadrover

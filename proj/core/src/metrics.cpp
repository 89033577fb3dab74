#include "quadrover/metrics.hpp"

#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>

#include <json.hpp>

namespace quadrover {

namespace {

bool is_transition_mode(Mode m) {
    return m == Mode::TransitionToFlight || m == Mode::TransitionToGround;
}

// Span between the last record before the transition began and the record
// where the target mode appears. With the ramp spanning whole telemetry
// intervals this reads off the commanded duration exactly.
double transition_span(const std::vector<TelemetryRecord>& records) {
    for (size_t i = 0; i < records.size(); ++i) {
        if (!(records[i].flag_mode_change && is_transition_mode(records[i].mode))) {
            continue;
        }
        const double start = i > 0 ? records[i - 1].t : 0.0;
        for (size_t j = i + 1; j < records.size(); ++j) {
            if (!is_transition_mode(records[j].mode)) {
                return records[j].t - start;
            }
        }
        return std::numeric_limits<double>::quiet_NaN();  // never completed
    }
    return std::numeric_limits<double>::quiet_NaN();
}

}  // namespace

MetricsReport::MetricsReport() {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    rmse_m = nan;
    mean_power_w = nan;
    energy_per_height_j_per_m = nan;
    lateral_g = nan;
    transition_time_s = nan;
}

MetricsReport compute_metrics(const std::vector<TelemetryRecord>& records,
                              const Scenario& scenario) {
    if (records.empty()) {
        throw std::invalid_argument("compute_metrics: empty telemetry");
    }

    MetricsReport rep;

    double sq = 0.0;
    for (const TelemetryRecord& r : records) {
        sq += r.tracking_error_m * r.tracking_error_m;
        rep.slip_occurred = rep.slip_occurred || r.flag_slip;
    }
    rep.rmse_m = std::sqrt(sq / double(records.size()));

    const TelemetryRecord& first = records.front();
    const TelemetryRecord& last = records.back();
    const double span = last.t - first.t;
    rep.mean_power_w = span > 0.0 ? (last.energy_j - first.energy_j) / span
                                  : first.power_w;

    if (scenario.kind == ScenarioKind::Circle) {
        rep.lateral_g = scenario.speed * scenario.speed /
                        (scenario.radius * kStandardG);
    }

    if (scenario.kind == ScenarioKind::SlopeClimb) {
        const double height = last.position.z - first.position.z;
        if (rep.slip_occurred) {
            // Climb failed; energy per height stays undefined.
        } else if (height < 1e-3) {
            throw std::domain_error("compute_metrics: slope run gained no height");
        } else {
            rep.energy_per_height_j_per_m = (last.energy_j - first.energy_j) / height;
        }
    }

    if (scenario.kind == ScenarioKind::Transition) {
        rep.transition_time_s = transition_span(records);
    }
    return rep;
}

void write_metrics_json(std::ostream& os, const MetricsReport& rep,
                        const std::string& status) {
    nlohmann::json j;
    j["status"] = status;
    j["slip_occurred"] = rep.slip_occurred;
    auto put = [&j](const char* key, double v) {
        if (std::isfinite(v)) j[key] = v;
    };
    put("rmse_m", rep.rmse_m);
    put("mean_power_w", rep.mean_power_w);
    put("energy_per_height_j_per_m", rep.energy_per_height_j_per_m);
    put("lateral_g", rep.lateral_g);
    put("transition_time_s", rep.transition_time_s);
    os << j.dump(2) << '\n';
}

}  // namespace quadrover

// Command-line front end: run one scenario, write telemetry (CSV or JSON)
// plus a metrics JSON, and report success through the exit code:
//   0 scenario completed, 1 scenario failed (slip/timeout), 2 usage/config.
#include <exception>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "quadrover/config.hpp"
#include "quadrover/metrics.hpp"
#include "quadrover/runner.hpp"
#include "quadrover/scenario.hpp"
#include "quadrover/telemetry.hpp"

namespace {

struct Options {
    std::string scenario;
    std::string config_path;
    std::string out_path;
    std::string metrics_path;
    std::string format{"csv"};
    double dt{0.002};
    double speed{-1.0};  // negative = scenario-specific default
    double radius{0.5};
    double duration{-1.0};
    double diameter{1.5};
    int cycles{3};
    double side{0.75};
    double segment_time{1.5};
    double turn_time{1.0};
    double slope_deg{5.0};
    double height_gain{0.5};
    double altitude{1.0};
    double switch_time{2.3};
    double hover_height{0.25};
};

double pick(double override_value, double fallback) {
    return override_value >= 0.0 ? override_value : fallback;
}

quadrover::Scenario build_scenario(const Options& o) {
    using namespace quadrover;
    Scenario sc;
    if (o.scenario == "hover") {
        sc = gen_hover(pick(o.duration, 5.0), o.altitude);
    } else if (o.scenario == "circle" || o.scenario == "circle-drive") {
        sc = gen_circle(o.radius, pick(o.speed, 1.0), pick(o.duration, 15.0),
                        o.scenario == "circle-drive");
        sc.altitude = o.altitude;
    } else if (o.scenario == "figure8") {
        sc = gen_figure8(o.diameter, pick(o.speed, 2.0), o.cycles);
        sc.altitude = o.altitude;
    } else if (o.scenario == "square") {
        sc = gen_square_path(o.side, o.segment_time, o.turn_time);
    } else if (o.scenario == "slope") {
        sc = gen_slope_climb(o.slope_deg, pick(o.speed, 0.5), o.height_gain);
    } else if (o.scenario == "transition") {
        sc = gen_transition(pick(o.speed, 0.5), o.switch_time, o.hover_height,
                            pick(o.duration, 6.0));
    } else {
        throw std::invalid_argument("unknown scenario '" + o.scenario + "'");
    }
    return sc;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"hybrid flying/driving quadrotor scenario simulator"};
    Options o;
    app.add_option("--scenario", o.scenario,
                   "hover | circle | circle-drive | figure8 | square | slope | transition")
        ->required();
    app.add_option("--config", o.config_path, "key = value parameter file");
    app.add_option("--out", o.out_path, "telemetry output path")->required();
    app.add_option("--dt", o.dt, "integration step [s], in (0, 0.01]");
    app.add_option("--format", o.format, "telemetry format")
        ->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--metrics", o.metrics_path,
                   "metrics JSON path (default: <out>.metrics.json)");
    app.add_option("--speed", o.speed, "path speed [m/s]");
    app.add_option("--radius", o.radius, "circle radius [m]");
    app.add_option("--duration", o.duration, "run duration [s]");
    app.add_option("--diameter", o.diameter, "figure8 major diameter [m]");
    app.add_option("--cycles", o.cycles, "figure8 cycles");
    app.add_option("--side", o.side, "square side length [m]");
    app.add_option("--segment-time", o.segment_time, "square segment duration [s]");
    app.add_option("--turn-time", o.turn_time, "square turn duration [s]");
    app.add_option("--slope-deg", o.slope_deg, "slope angle [deg]");
    app.add_option("--height-gain", o.height_gain, "slope height target [m]");
    app.add_option("--altitude", o.altitude, "flight altitude [m]");
    app.add_option("--switch-time", o.switch_time, "transition request time [s]");
    app.add_option("--hover-height", o.hover_height, "post-transition hover height [m]");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        std::cout << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n\n" << app.help();
        return 2;
    }

    using namespace quadrover;

    VehicleParams params;
    Scenario scenario;
    try {
        if (!o.config_path.empty()) params = load_config(o.config_path);
        scenario = build_scenario(o);
        if (!(o.dt > 0.0) || o.dt > 0.01) {
            throw std::invalid_argument("--dt must be in (0, 0.01]");
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }

    RunResult result;
    try {
        result = run_scenario(scenario, params, RunOptions{o.dt, 0.01});
    } catch (const std::exception& e) {
        std::cerr << "error: scenario run failed: " << e.what() << '\n';
        return 1;
    }

    {
        std::ofstream out(o.out_path);
        if (!out) {
            std::cerr << "error: cannot open '" << o.out_path << "' for writing\n";
            return 2;
        }
        if (o.format == "csv") {
            write_csv(out, result.records);
        } else {
            write_json(out, result.records);
        }
    }

    const std::string metrics_path =
        o.metrics_path.empty() ? o.out_path + ".metrics.json" : o.metrics_path;
    bool metrics_failed = false;
    {
        std::ofstream mout(metrics_path);
        if (!mout) {
            std::cerr << "error: cannot open '" << metrics_path << "' for writing\n";
            return 2;
        }
        MetricsReport report;
        if (!result.records.empty()) {
            try {
                report = compute_metrics(result.records, scenario);
            } catch (const std::domain_error& e) {
                std::cerr << "error: " << e.what() << '\n';
                metrics_failed = true;
            }
        }
        write_metrics_json(mout, report, run_status_name(result.status));
    }

    std::cout << "scenario " << o.scenario << ": " << run_status_name(result.status)
              << ", " << result.records.size() << " records, " << result.steps_total
              << " steps -> " << o.out_path << '\n';
    if (!result.diagnostic.empty()) {
        std::cerr << "note: " << result.diagnostic << '\n';
    }
    return (result.status == RunStatus::Ok && !metrics_failed) ? 0 : 1;
}

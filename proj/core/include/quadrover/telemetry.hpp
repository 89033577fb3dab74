#pragma once

#include <array>
#include <iosfwd>
#include <vector>

#include "quadrover/state.hpp"
#include "quadrover/vec3.hpp"

namespace quadrover {

// One telemetry sample. All real fields are quantized to 9 significant
// digits when the record is created, so CSV serialization round-trips
// exactly.
struct TelemetryRecord {
    double t{0.0};
    Mode mode{Mode::Flight};
    Vec3 position{};
    Vec3 velocity{};
    double yaw{0.0};
    std::array<double, 4> motor_cmd{};
    std::array<double, 4> motor_speed{};
    std::array<double, 4> prop_speed{};
    double wheel_right{0.0};
    double wheel_left{0.0};
    double power_w{0.0};
    double energy_j{0.0};
    double tracking_error_m{0.0};
    bool flag_slip{false};
    bool flag_saturation{false};
    bool flag_mode_change{false};
};

inline constexpr const char* kTelemetryHeader =
    "t,mode,px,py,pz,vx,vy,vz,yaw,cmd1,cmd2,cmd3,cmd4,w1,w2,w3,w4,"
    "p1,p2,p3,p4,wr,wl,power,energy,err,flags";

// Nearest double whose %.9g representation reads back as itself.
double round_sig9(double v);

void write_csv(std::ostream& os, const std::vector<TelemetryRecord>& records);

// Parses a file produced by write_csv. Throws std::runtime_error on a bad
// header, wrong column count, or unparsable field.
std::vector<TelemetryRecord> read_csv(std::istream& is);

void write_json(std::ostream& os, const std::vector<TelemetryRecord>& records);

}  // namespace quadrover

#include "quadrover/telemetry.hpp"

#include <cstdio>
#include <cstdlib>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

namespace quadrover {

namespace {

std::string fmt9(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

std::string flags_of(const TelemetryRecord& r) {
    std::string s;
    auto add = [&s](const char* tok) {
        if (!s.empty()) s += ';';
        s += tok;
    };
    if (r.flag_slip) add("slip");
    if (r.flag_saturation) add("saturation");
    if (r.flag_mode_change) add("mode_change");
    return s;
}

double parse_real(const std::string& field, int line_no) {
    char* end = nullptr;
    const double v = std::strtod(field.c_str(), &end);
    if (end == field.c_str() || *end != '\0') {
        throw std::runtime_error("telemetry csv: bad numeric field at line " +
                                 std::to_string(line_no));
    }
    return v;
}

}  // namespace

double round_sig9(double v) {
    return std::strtod(fmt9(v).c_str(), nullptr);
}

void write_csv(std::ostream& os, const std::vector<TelemetryRecord>& records) {
    os << kTelemetryHeader << '\n';
    for (const TelemetryRecord& r : records) {
        os << fmt9(r.t) << ',' << mode_name(r.mode) << ',' << fmt9(r.position.x)
           << ',' << fmt9(r.position.y) << ',' << fmt9(r.position.z) << ','
           << fmt9(r.velocity.x) << ',' << fmt9(r.velocity.y) << ','
           << fmt9(r.velocity.z) << ',' << fmt9(r.yaw);
        for (double c : r.motor_cmd) os << ',' << fmt9(c);
        for (double w : r.motor_speed) os << ',' << fmt9(w);
        for (double p : r.prop_speed) os << ',' << fmt9(p);
        os << ',' << fmt9(r.wheel_right) << ',' << fmt9(r.wheel_left) << ','
           << fmt9(r.power_w) << ',' << fmt9(r.energy_j) << ','
           << fmt9(r.tracking_error_m) << ',' << flags_of(r) << '\n';
    }
}

std::vector<TelemetryRecord> read_csv(std::istream& is) {
    std::string line;
    if (!std::getline(is, line) || line != kTelemetryHeader) {
        throw std::runtime_error("telemetry csv: missing or unexpected header");
    }
    std::vector<TelemetryRecord> out;
    int line_no = 1;
    while (std::getline(is, line)) {
        ++line_no;
        if (line.empty()) continue;
        std::vector<std::string> f;
        std::string cur;
        for (char ch : line) {
            if (ch == ',') {
                f.push_back(cur);
                cur.clear();
            } else {
                cur += ch;
            }
        }
        f.push_back(cur);
        if (f.size() != 27) {
            throw std::runtime_error("telemetry csv: expected 27 columns at line " +
                                     std::to_string(line_no));
        }
        TelemetryRecord r;
        int i = 0;
        r.t = parse_real(f[i++], line_no);
        r.mode = mode_from_name(f[i++]);
        r.position = {parse_real(f[i], line_no), parse_real(f[i + 1], line_no),
                      parse_real(f[i + 2], line_no)};
        i += 3;
        r.velocity = {parse_real(f[i], line_no), parse_real(f[i + 1], line_no),
                      parse_real(f[i + 2], line_no)};
        i += 3;
        r.yaw = parse_real(f[i++], line_no);
        for (double& c : r.motor_cmd) c = parse_real(f[i++], line_no);
        for (double& w : r.motor_speed) w = parse_real(f[i++], line_no);
        for (double& pr : r.prop_speed) pr = parse_real(f[i++], line_no);
        r.wheel_right = parse_real(f[i++], line_no);
        r.wheel_left = parse_real(f[i++], line_no);
        r.power_w = parse_real(f[i++], line_no);
        r.energy_j = parse_real(f[i++], line_no);
        r.tracking_error_m = parse_real(f[i++], line_no);
        std::stringstream toks(f[i]);
        std::string tok;
        while (std::getline(toks, tok, ';')) {
            if (tok == "slip") r.flag_slip = true;
            else if (tok == "saturation") r.flag_saturation = true;
            else if (tok == "mode_change") r.flag_mode_change = true;
            else if (!tok.empty()) {
                throw std::runtime_error("telemetry csv: unknown flag token '" + tok +
                                         "' at line " + std::to_string(line_no));
            }
        }
        out.push_back(r);
    }
    return out;
}

void write_json(std::ostream& os, const std::vector<TelemetryRecord>& records) {
    nlohmann::json arr = nlohmann::json::array();
    for (const TelemetryRecord& r : records) {
        nlohmann::json j;
        j["t"] = r.t;
        j["mode"] = mode_name(r.mode);
        j["position"] = {r.position.x, r.position.y, r.position.z};
        j["velocity"] = {r.velocity.x, r.velocity.y, r.velocity.z};
        j["yaw"] = r.yaw;
        j["motor_cmd"] = r.motor_cmd;
        j["motor_speed"] = r.motor_speed;
        j["prop_speed"] = r.prop_speed;
        j["wheel_speed"] = {r.wheel_right, r.wheel_left};
        j["power_w"] = r.power_w;
        j["energy_j"] = r.energy_j;
        j["tracking_error_m"] = r.tracking_error_m;
        nlohmann::json flags = nlohmann::json::array();
        if (r.flag_slip) flags.push_back("slip");
        if (r.flag_saturation) flags.push_back("saturation");
        if (r.flag_mode_change) flags.push_back("mode_change");
        j["flags"] = flags;
        arr.push_back(std::move(j));
    }
    os << arr.dump(2) << '\n';
}

}  // namespace quadrover

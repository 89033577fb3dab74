#include "quadrover/config.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <istream>
#include <map>
#include <set>
#include <string>

#include "quadrover/power.hpp"

namespace quadrover {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double to_real(const std::string& key, const std::string& value) {
    char* end = nullptr;
    const double v = std::strtod(value.c_str(), &end);
    if (end == value.c_str() || *end != '\0' || !std::isfinite(v)) {
        throw ConfigError("config: bad numeric value for '" + key + "': " + value);
    }
    return v;
}

}  // namespace

VehicleParams parse_config(std::istream& is) {
    VehicleParams p;

    const std::map<std::string, std::function<void(double)>> setters = {
        {"mass_kg", [&](double v) { p.mass = v; }},
        {"inertia_xx_kgm2", [&](double v) { p.inertia.x = v; }},
        {"inertia_yy_kgm2", [&](double v) { p.inertia.y = v; }},
        {"inertia_zz_kgm2", [&](double v) { p.inertia.z = v; }},
        {"arm_length_m", [&](double v) { p.arm_length = v; }},
        {"torque_to_thrust_m", [&](double v) { p.torque_to_thrust = v; }},
        {"thrust_coeff", [&](double v) { p.thrust_coeff = v; }},
        {"omega_nat_hz", [&](double v) { p.omega_nat = 2.0 * M_PI * v; }},
        {"omega_nat_rad_s", [&](double v) { p.omega_nat = v; }},
        {"zeta", [&](double v) { p.zeta = v; }},
        {"accel_sat_m_s2", [&](double v) { p.accel_sat = v; }},
        {"tau_att_x_s", [&](double v) { p.tau_att.x = v; }},
        {"tau_att_y_s", [&](double v) { p.tau_att.y = v; }},
        {"tau_att_z_s", [&](double v) { p.tau_att.z = v; }},
        {"tau_omega_x_s", [&](double v) { p.tau_omega.x = v; }},
        {"tau_omega_y_s", [&](double v) { p.tau_omega.y = v; }},
        {"tau_omega_z_s", [&](double v) { p.tau_omega.z = v; }},
        {"speed_gain_k1_rad_m", [&](double v) { p.speed_gain_k1 = v; }},
        {"track_gain_k2_m", [&](double v) { p.track_gain_k2 = v; }},
        {"reduction_k3", [&](double v) { p.reduction_k3 = v; }},
        {"wheel_idle_speed_rad_s", [&](double v) { p.wheel_idle_speed = v; }},
        {"motor_speed_max_rad_s", [&](double v) { p.motor_speed_max = v; }},
        {"motor_time_constant_s", [&](double v) { p.motor_time_constant = v; }},
        {"bearing_friction_torque_nm", [&](double v) { p.bearing_friction_torque = v; }},
        {"prop_inertia_kgm2", [&](double v) { p.prop_inertia = v; }},
        {"prop_drag_coeff", [&](double v) { p.prop_drag_coeff = v; }},
        {"motor_efficiency", [&](double v) { p.motor_efficiency = v; }},
        {"drive_efficiency", [&](double v) { p.drive_efficiency = v; }},
        {"idle_power_w", [&](double v) { p.idle_power = v; }},
        {"rolling_resistance", [&](double v) { p.rolling_resistance = v; }},
        {"traction_mu", [&](double v) { p.traction_mu = v; }},
        {"transition_duration_s", [&](double v) { p.transition_duration = v; }},
        {"hover_power_w", [&](double)/* applied after parsing */ {}},
    };

    std::set<std::string> seen;
    double hover_power = 0.0;
    bool have_hover_power = false;

    std::string line;
    int line_no = 0;
    while (std::getline(is, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;

        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw ConfigError("config: expected 'key = value' at line " +
                              std::to_string(line_no));
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        const auto it = setters.find(key);
        if (it == setters.end()) {
            throw ConfigError("config: unknown key '" + key + "' at line " +
                              std::to_string(line_no));
        }
        if (!seen.insert(key).second) {
            throw ConfigError("config: duplicate key '" + key + "'");
        }
        const double v = to_real(key, value);
        if (key == "hover_power_w") {
            hover_power = v;
            have_hover_power = true;
        } else {
            it->second(v);
        }
    }

    if (seen.count("omega_nat_hz") && seen.count("omega_nat_rad_s")) {
        throw ConfigError("config: give omega_nat_hz or omega_nat_rad_s, not both");
    }
    if (have_hover_power && seen.count("thrust_coeff")) {
        throw ConfigError("config: give thrust_coeff or hover_power_w, not both");
    }

    try {
        if (have_hover_power) {
            p.thrust_coeff = calibrate_thrust_coeff(hover_power, p);
        }
        p.validate();
    } catch (const std::exception& e) {
        throw ConfigError(std::string("config: ") + e.what());
    }
    return p;
}

VehicleParams load_config(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ConfigError("config: cannot open '" + path + "'");
    return parse_config(f);
}

}  // namespace quadrover

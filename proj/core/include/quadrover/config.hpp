#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "quadrover/params.hpp"

namespace quadrover {

// Configuration problems: unreadable file, unknown/duplicate keys, malformed
// values, or parameters that fail validation. The CLI maps this to exit 2.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Parses flat `key = value` text ('#' starts a comment). Keys are unit
// suffixed (mass_kg, tau_att_x_s, ...). The natural frequency may be given as
// omega_nat_hz or omega_nat_rad_s but not both. thrust_coeff may be set
// directly or calibrated via hover_power_w, not both. Unknown keys are
// errors. Omitted keys keep their defaults.
VehicleParams parse_config(std::istream& is);

// parse_config on a file; a missing or unreadable path is a ConfigError.
VehicleParams load_config(const std::string& path);

}  // namespace quadrover

#include <gtest/gtest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "quadrover/config.hpp"
#include "quadrover/power.hpp"

using namespace quadrover;

namespace {

VehicleParams parse(const std::string& text) {
    std::istringstream is(text);
    return parse_config(is);
}

void expect_error_containing(const std::string& text, const std::string& needle) {
    try {
        parse(text);
        FAIL() << "expected ConfigError for: " << text;
    } catch (const ConfigError& e) {
        EXPECT_NE(std::string(e.what()).find(needle), std::string::npos)
            << "got: " << e.what();
    }
}

}  // namespace

TEST(Config, EmptyInputKeepsDefaults) {
    const VehicleParams p = parse("");
    const VehicleParams d = VehicleParams::defaults();
    EXPECT_DOUBLE_EQ(p.mass, d.mass);
    EXPECT_DOUBLE_EQ(p.thrust_coeff, d.thrust_coeff);
    EXPECT_DOUBLE_EQ(p.omega_nat, d.omega_nat);
    EXPECT_DOUBLE_EQ(p.transition_duration, d.transition_duration);
}

TEST(Config, CommentsAndWhitespaceAreIgnored) {
    const VehicleParams p = parse(
        "# full-line comment\n"
        "\n"
        "  mass_kg   =  0.9   # trailing comment\n"
        "\t\n"
        "zeta = 0.8\n");
    EXPECT_DOUBLE_EQ(p.mass, 0.9);
    EXPECT_DOUBLE_EQ(p.zeta, 0.8);
}

TEST(Config, SetsEveryVectorComponentIndividually) {
    const VehicleParams p = parse(
        "inertia_xx_kgm2 = 1e-3\n"
        "inertia_yy_kgm2 = 2e-3\n"
        "inertia_zz_kgm2 = 3e-3\n"
        "tau_att_x_s = 0.11\n"
        "tau_att_y_s = 0.12\n"
        "tau_att_z_s = 0.13\n"
        "tau_omega_x_s = 0.04\n"
        "tau_omega_y_s = 0.05\n"
        "tau_omega_z_s = 0.06\n");
    EXPECT_DOUBLE_EQ(p.inertia.x, 1e-3);
    EXPECT_DOUBLE_EQ(p.inertia.y, 2e-3);
    EXPECT_DOUBLE_EQ(p.inertia.z, 3e-3);
    EXPECT_DOUBLE_EQ(p.tau_att.x, 0.11);
    EXPECT_DOUBLE_EQ(p.tau_att.y, 0.12);
    EXPECT_DOUBLE_EQ(p.tau_att.z, 0.13);
    EXPECT_DOUBLE_EQ(p.tau_omega.x, 0.04);
    EXPECT_DOUBLE_EQ(p.tau_omega.y, 0.05);
    EXPECT_DOUBLE_EQ(p.tau_omega.z, 0.06);
}

TEST(Config, NaturalFrequencyAcceptsEitherUnit) {
    EXPECT_DOUBLE_EQ(parse("omega_nat_rad_s = 3.5\n").omega_nat, 3.5);
    EXPECT_DOUBLE_EQ(parse("omega_nat_hz = 0.5\n").omega_nat, M_PI);
}

TEST(Config, HoverPowerCalibratesThrustCoefficient) {
    const VehicleParams p = parse("hover_power_w = 124.35\n");
    EXPECT_DOUBLE_EQ(p.thrust_coeff, VehicleParams::defaults().thrust_coeff);

    // Calibration must see the mass from the same file, not the default.
    const VehicleParams q = parse("mass_kg = 1.0\nhover_power_w = 124.35\n");
    VehicleParams ref = VehicleParams::defaults();
    ref.mass = 1.0;
    EXPECT_DOUBLE_EQ(q.thrust_coeff, calibrate_thrust_coeff(124.35, ref));
    EXPECT_NE(q.thrust_coeff, p.thrust_coeff);
}

TEST(Config, DirectThrustCoefficientStillWorks) {
    EXPECT_DOUBLE_EQ(parse("thrust_coeff = 3e-6\n").thrust_coeff, 3e-6);
}

TEST(Config, UnknownKeyNamesTheLine) {
    expect_error_containing("mass_kg = 0.8\nbogus_key = 1\n", "unknown key");
    expect_error_containing("mass_kg = 0.8\nbogus_key = 1\n", "line 2");
}

TEST(Config, DuplicateKeyRejected) {
    expect_error_containing("zeta = 1\nzeta = 1\n", "duplicate");
}

TEST(Config, BothFrequencyUnitsRejected) {
    expect_error_containing("omega_nat_hz = 2\nomega_nat_rad_s = 12.56\n",
                            "not both");
}

TEST(Config, ThrustCoeffAndHoverPowerConflict) {
    expect_error_containing("thrust_coeff = 3e-6\nhover_power_w = 124.35\n",
                            "not both");
}

TEST(Config, MalformedLinesRejected) {
    expect_error_containing("mass_kg 0.8\n", "key = value");
    expect_error_containing("mass_kg = heavy\n", "bad numeric");
    expect_error_containing("mass_kg = \n", "bad numeric");
    expect_error_containing("mass_kg = 1e999\n", "bad numeric");
    expect_error_containing("mass_kg = 0.8 kg\n", "bad numeric");
}

TEST(Config, ValidationFailuresBecomeConfigErrors) {
    expect_error_containing("mass_kg = -1\n", "mass");
    expect_error_containing("motor_efficiency = 1.5\n", "motor_efficiency");
    expect_error_containing("hover_power_w = -3\n", "hover power");
    expect_error_containing("wheel_idle_speed_rad_s = 2000\n", "motor_speed_max");
}

TEST(Config, LoadFromMissingPathFails) {
    EXPECT_THROW(load_config("/nonexistent/quadrover.cfg"), ConfigError);
}

TEST(Config, LoadFromFileMatchesStreamParse) {
    const std::string path = testing::TempDir() + "quadrover_config_test.cfg";
    {
        std::ofstream f(path);
        f << "mass_kg = 0.85\nomega_nat_rad_s = 2.5\n";
    }
    const VehicleParams p = load_config(path);
    EXPECT_DOUBLE_EQ(p.mass, 0.85);
    EXPECT_DOUBLE_EQ(p.omega_nat, 2.5);
    std::remove(path.c_str());
}

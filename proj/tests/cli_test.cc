#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "quadrover/telemetry.hpp"

#ifndef SIMULATE_BIN
#error "SIMULATE_BIN must point at the simulate executable"
#endif

namespace {

struct RunOutcome {
    int exit_code{-1};
};

std::string g_dir;

RunOutcome run_cli(const std::string& args) {
    const std::string cmd =
        std::string(SIMULATE_BIN) + " " + args + " > /dev/null 2>&1";
    const int raw = std::system(cmd.c_str());
    RunOutcome out;
    if (WIFEXITED(raw)) out.exit_code = WEXITSTATUS(raw);
    return out;
}

std::string slurp(const std::string& path) {
    std::ifstream f(path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

std::string path_in_dir(const std::string& name) { return g_dir + "/" + name; }

}  // namespace

class CliTest : public ::testing::Test {
  protected:
    static void SetUpTestSuite() {
        char tmpl[] = "/tmp/quadrover_cli_XXXXXX";
        ASSERT_NE(mkdtemp(tmpl), nullptr);
        g_dir = tmpl;
    }
};

TEST_F(CliTest, HoverRunWritesCsvWithHeader) {
    const std::string out = path_in_dir("hover.csv");
    const RunOutcome r =
        run_cli("--scenario hover --duration 1 --out " + out);
    EXPECT_EQ(r.exit_code, 0);

    std::ifstream f(out);
    ASSERT_TRUE(f.good());
    std::string header;
    std::getline(f, header);
    EXPECT_EQ(header, quadrover::kTelemetryHeader);
    const auto records = [&] {
        std::ifstream again(out);
        return quadrover::read_csv(again);
    }();
    EXPECT_EQ(records.size(), 100u);

    // The metrics JSON lands next to the telemetry by default.
    const nlohmann::json j = nlohmann::json::parse(slurp(out + ".metrics.json"));
    EXPECT_EQ(j["status"].get<std::string>(), "ok");
    EXPECT_LT(j["rmse_m"].get<double>(), 1e-6);
}

TEST_F(CliTest, RepeatedInvocationsProduceIdenticalFiles) {
    const std::string a = path_in_dir("det_a.csv");
    const std::string b = path_in_dir("det_b.csv");
    ASSERT_EQ(run_cli("--scenario figure8 --cycles 1 --out " + a).exit_code, 0);
    ASSERT_EQ(run_cli("--scenario figure8 --cycles 1 --out " + b).exit_code, 0);
    const std::string ca = slurp(a), cb = slurp(b);
    ASSERT_FALSE(ca.empty());
    EXPECT_EQ(ca, cb);
}

TEST_F(CliTest, JsonFormatParses) {
    const std::string out = path_in_dir("hover.json");
    ASSERT_EQ(run_cli("--scenario hover --duration 0.5 --format json --out " + out)
                  .exit_code,
              0);
    const nlohmann::json j = nlohmann::json::parse(slurp(out));
    ASSERT_TRUE(j.is_array());
    EXPECT_EQ(j.size(), 50u);
    EXPECT_EQ(j[0]["mode"].get<std::string>(), "flight");
}

TEST_F(CliTest, SlipScenarioExitsOneAndReportsIt) {
    const std::string out = path_in_dir("slip.csv");
    const std::string metrics = path_in_dir("slip_metrics.json");
    const RunOutcome r = run_cli("--scenario slope --slope-deg 35 --out " + out +
                                 " --metrics " + metrics);
    EXPECT_EQ(r.exit_code, 1);
    const nlohmann::json j = nlohmann::json::parse(slurp(metrics));
    EXPECT_EQ(j["status"].get<std::string>(), "slip");
    EXPECT_TRUE(j["slip_occurred"].get<bool>());
}

TEST_F(CliTest, GoodConfigIsAccepted) {
    const std::string cfg = path_in_dir("ok.cfg");
    {
        std::ofstream f(cfg);
        f << "# test tuning\nomega_nat_rad_s = 2.0\nzeta = 1.0\n";
    }
    const std::string out = path_in_dir("cfg_hover.csv");
    EXPECT_EQ(run_cli("--scenario hover --duration 0.5 --config " + cfg +
                      " --out " + out)
                  .exit_code,
              0);
}

TEST_F(CliTest, MissingConfigFileExitsTwo) {
    EXPECT_EQ(run_cli("--scenario hover --config /nope/missing.cfg --out " +
                      path_in_dir("x.csv"))
                  .exit_code,
              2);
}

TEST_F(CliTest, BadConfigContentExitsTwo) {
    const std::string cfg = path_in_dir("bad.cfg");
    {
        std::ofstream f(cfg);
        f << "definitely_not_a_key = 7\n";
    }
    EXPECT_EQ(run_cli("--scenario hover --config " + cfg + " --out " +
                      path_in_dir("y.csv"))
                  .exit_code,
              2);
}

TEST_F(CliTest, UnknownScenarioExitsTwo) {
    EXPECT_EQ(run_cli("--scenario teleport --out " + path_in_dir("z.csv")).exit_code,
              2);
}

TEST_F(CliTest, UnknownFlagExitsTwo) {
    EXPECT_EQ(run_cli("--scenario hover --out " + path_in_dir("w.csv") +
                      " --warp-factor 9")
                  .exit_code,
              2);
}

TEST_F(CliTest, MissingRequiredFlagsExitTwo) {
    EXPECT_EQ(run_cli("--scenario hover").exit_code, 2);
    EXPECT_EQ(run_cli("--out " + path_in_dir("v.csv")).exit_code, 2);
}

TEST_F(CliTest, BadTimestepExitsTwo) {
    EXPECT_EQ(run_cli("--scenario hover --dt 0.5 --out " + path_in_dir("u.csv"))
                  .exit_code,
              2);
}

TEST_F(CliTest, Figure8MetricsReportTracking) {
    const std::string out = path_in_dir("f8.csv");
    const std::string metrics = path_in_dir("f8_metrics.json");
    const RunOutcome r = run_cli("--scenario figure8 --cycles 1 --out " + out +
                                 " --metrics " + metrics);
    EXPECT_EQ(r.exit_code, 0);
    const nlohmann::json j = nlohmann::json::parse(slurp(metrics));
    EXPECT_LT(j["rmse_m"].get<double>(), 0.25);
    EXPECT_GT(j["mean_power_w"].get<double>(), 100.0);
}

#include <algorithm>
#include <gtest/gtest.h>

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "teichlab/cli.hpp"

namespace cli = teichlab::cli;
using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

json run_json(const std::vector<std::string>& args) {
  const auto r = run(args);
  EXPECT_EQ(r.code, 0) << r.err;
  return json::parse(r.out);
}

// Errors are one line of JSON carrying an error code.
std::string error_code(const Result& r) {
  EXPECT_NE(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  EXPECT_EQ(std::count(r.err.begin(), r.err.end(), '\n'), 1) << r.err;
  return json::parse(r.err).at("error").get<std::string>();
}

std::string temp_path(const std::string& name) {
  return std::string(TEICHLAB_TEST_TMPDIR) + "/" + name;
}

}  // namespace

TEST(Cli, Sig9Formatting) {
  EXPECT_EQ(cli::format_sig9(0.5493061443340548), "0.549306144");
  EXPECT_EQ(cli::format_sig9(-0.0), "0");
  EXPECT_EQ(cli::round_sig9(1.23456789012e-7), 1.23456789e-7);
}

TEST(Cli, Distance) {
  const auto j = run_json({"distance", "--k", "0.5", "--p", "1,1", "--q", "1,0"});
  EXPECT_EQ(j["command"], "distance");
  EXPECT_DOUBLE_EQ(j["tau"].get<double>(), 0.549306144);
  const auto same = run_json({"distance", "--k", "0.5", "--p", "0.3,0.2", "--q", "0.3,0.2"});
  EXPECT_EQ(same["tau"].get<double>(), 0.0);
}

TEST(Cli, DistanceFromLength) {
  const auto j = run_json({"distance", "--l", "0.5493061443340548", "--p", "mu", "--q", "mu1"});
  EXPECT_DOUBLE_EQ(j["k"].get<double>(), 0.5);
  EXPECT_DOUBLE_EQ(j["tau"].get<double>(), 0.549306144);
}

TEST(Cli, InvariantViolationExitCode) {
  const auto r = run({"distance", "--k", "0.5", "--p", "3,0", "--q", "1,0"});
  EXPECT_EQ(r.code, cli::kInvariant);
  EXPECT_EQ(error_code(r), "invariant_violation");
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(error_code(run({"distance", "--k", "0.5", "--l", "0.5", "--p", "1,1", "--q", "1,0"})),
            "input_error");
  EXPECT_EQ(error_code(run({"distance", "--k", "0.5", "--p", "1,1"})), "input_error");
  EXPECT_EQ(error_code(run({"distance", "--k", "abc", "--p", "1,1", "--q", "1,0"})),
            "input_error");
  EXPECT_EQ(error_code(run({"frobnicate"})), "usage");
  EXPECT_EQ(error_code(run({})), "usage");
  EXPECT_EQ(error_code(run({"probe", "--k", "0.5", "--format", "csv"})), "input_error");
}

TEST(Cli, AngleBaseIsThirdOfPi) {
  const auto j = run_json(
      {"angle", "--k", "0.5", "--a", "alpha-mu", "--b", "alpha-mu1", "--vertex", "base"});
  EXPECT_EQ(j["verdict"], "exists");
  EXPECT_NEAR(j["theta"].get<double>(), 1.04719755, 1e-4);
  EXPECT_EQ(j["diagnostics"].size(), 20u);
}

TEST(Cli, AngleConstantSigmaAtMu) {
  const auto j = run_json({"angle", "--k", "0.5", "--a", "alpha-mu", "--b",
                           "sigma:constant-one", "--vertex", "mu"});
  EXPECT_NEAR(j["theta"].get<double>(), 1.04719755, 1e-4);
}

TEST(Cli, AngleOscillatory) {
  const auto j = run_json({"angle", "--k", "0.5", "--a", "alpha-mu", "--b",
                           "sigma:oscillatory", "--vertex", "mu"});
  EXPECT_EQ(j["verdict"], "does-not-exist");
  EXPECT_TRUE(j["theta"].is_null());
}

TEST(Cli, AngleUnknownFamily) {
  EXPECT_EQ(error_code(run({"angle", "--k", "0.5", "--a", "alpha-mu", "--b", "sigma:wobbly",
                            "--vertex", "mu"})),
            "input_error");
}

TEST(Cli, AngleInvalidSigma) {
  const auto r = run({"angle", "--k", "0.5", "--a", "alpha-mu", "--b",
                      "sigma:prescribed-germ:9,0", "--vertex", "mu"});
  EXPECT_EQ(r.code, cli::kUsage);
  EXPECT_EQ(error_code(r), "input_error");
}

TEST(Cli, AngleCsvDiagnostics) {
  const auto r = run({"angle", "--k", "0.5", "--a", "alpha-mu", "--b", "alpha-mu1", "--vertex",
                      "base", "--format", "csv", "--schedule", "0.01,0.5,8"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream lines(r.out);
  std::string line;
  std::getline(lines, line);
  EXPECT_EQ(line, "r,ratio");
  int rows = 0;
  while (std::getline(lines, line)) ++rows;
  EXPECT_EQ(rows, 8);

  const std::string side = temp_path("diag.csv");
  run_json({"angle", "--k", "0.5", "--a", "alpha-mu", "--b", "alpha-mu1", "--vertex", "base",
            "--diagnostics-csv", side});
  std::ifstream f(side);
  std::getline(f, line);
  EXPECT_EQ(line, "r,ratio");
}

TEST(Cli, TriangleEquilateralAndDegrees) {
  const auto j = run_json({"triangle", "--l", "0.5493061443340548", "--theta", "60,60,60",
                           "--degrees"});
  const auto& rep = j["reports"][0];
  EXPECT_TRUE(rep["ok"].get<bool>());
  for (const auto& m : rep["measured"]) EXPECT_NEAR(m["theta"].get<double>(), 1.04719755, 1e-3);
}

TEST(Cli, TriangleFamily) {
  const auto j = run_json({"triangle", "--k", "0.5", "--theta", "1.5707963267948966,1.0471975511965976,0.7853981633974483",
                           "--family", "3", "--seed", "4"});
  EXPECT_EQ(j["reports"].size(), 3u);
  EXPECT_GT(j["beta_min_pairwise_gap"].get<double>(), 1e-6);
}

TEST(Cli, Probe) {
  const auto j = run_json({"probe", "--k", "0.5"});
  EXPECT_DOUBLE_EQ(j["midpoint_distance"].get<double>(), j["base"].get<double>());
  EXPECT_TRUE(j["negative_curvature_violated"].get<bool>());
}

TEST(Cli, SweepIsMonotone) {
  const auto j = run_json({"sweep", "--k", "0.5", "--at", "mu"});
  EXPECT_EQ(j["rows"].size(), 5u);
  EXPECT_TRUE(j["monotone"].get<bool>());
  double previous = -1;
  for (const auto& row : j["rows"]) {
    EXPECT_GE(row["measured"].get<double>(), previous);
    previous = row["measured"].get<double>();
  }
}

TEST(Cli, SigmaValidate) {
  const auto j = run_json({"sigma-validate", "--k", "0.5", "--sigma", "constant-one"});
  EXPECT_TRUE(j["admissible"].get<bool>());
  EXPECT_TRUE(j["distinct"].get<bool>());
  const auto o = run_json({"sigma-validate", "--k", "0.5", "--sigma", "oscillatory"});
  EXPECT_FALSE(o["geodesic"].get<bool>());
  EXPECT_TRUE(o["d0"].is_null());
}

TEST(Cli, ConfigFileAndOverrides) {
  const std::string path = temp_path("run.json");
  {
    std::ofstream f(path);
    f << R"({"command": "distance", "l": 0.5493061443340548, "p": [1, 1], "q": "mu1"})";
  }
  const auto j = run_json({"--config", path});
  EXPECT_DOUBLE_EQ(j["tau"].get<double>(), 0.549306144);
  const auto over = run_json({"distance", "--config", path, "--k", "0.3"});
  EXPECT_DOUBLE_EQ(over["k"].get<double>(), 0.3);

  {
    std::ofstream f(path);
    f << R"({"command": "distance", "kk": 0.5})";
  }
  EXPECT_EQ(error_code(run({"--config", path})), "input_error");
  EXPECT_EQ(error_code(run({"--config", temp_path("missing.json")})), "io_error");
}

TEST(Cli, OutputFile) {
  const std::string path = temp_path("probe.json");
  const auto r = run({"probe", "--k", "0.5", "--out", path});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream f(path);
  EXPECT_EQ(json::parse(f)["command"], "probe");
}

TEST(Cli, ByteIdenticalOutput) {
  const std::vector<std::string> args{"triangle", "--k", "0.6", "--theta", "0.3,2.9,1.1",
                                      "--family", "2", "--seed", "11"};
  EXPECT_EQ(run(args).out, run(args).out);
}

TEST(Cli, HelpExitsCleanly) {
  const auto r = run({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("sigma-validate"), std::string::npos);
}

#include "helicap/pipeline.hpp"
#include "helicap/profile_io.hpp"
#include "helicap/property_suite.hpp"
#include "helicap/report.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <sys/wait.h>
#include <unistd.h>

using namespace helicap;
namespace fs = std::filesystem;
using std::numbers::pi;

namespace {

struct Run {
  int code = -1;
  std::string out;
  std::string err;
};

fs::path scratch() {
  static const fs::path dir = [] {
    auto d = fs::temp_directory_path() / ("helicap_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Run run_cli(const std::string& args) {
  static int counter = 0;
  const auto out = scratch() / ("out" + std::to_string(counter) + ".txt");
  const auto err = scratch() / ("err" + std::to_string(counter++) + ".txt");
  const std::string cmd = std::string("\"") + HELICAP_CLI_PATH + "\" " + args + " >\"" + out.string() + "\" 2>\"" +
                          err.string() + "\"";
  const int status = std::system(cmd.c_str());
  Run r;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(out);
  r.err = slurp(err);
  return r;
}

fs::path write(const std::string& name, const std::string& text) {
  const auto p = scratch() / name;
  std::ofstream(p) << text;
  return p;
}

nlohmann::json strip_timing(nlohmann::json j) {
  j.erase("timing");
  j.erase("command");
  return j;
}

}  // namespace

TEST(ProfileIo, RoundTrip) {
  const auto prof = boundary_helicity_profile(shell_region(4, 1.0, 2.0), ExactFormWitness::standard(4));
  EXPECT_EQ(load_profile_text(emit_profile(prof)), prof);
  const auto hand = HelicityProfile::from_values(3, {0.1, -1e-17, 12345.678901234567});
  EXPECT_EQ(load_profile_text(emit_profile(hand)), hand);
  const auto path = write("rt.json", emit_profile(prof));
  EXPECT_EQ(load_profile(path.string()), prof);
}

TEST(ProfileIo, MalformedJsonReportsLineAndColumn) {
  try {
    load_profile_text("{\n  \"n\": 2,\n  \"components\": [ {\"h\": 1.0,, } ]\n}");
    FAIL();
  } catch (const ProfileFormatError& e) {
    const std::string msg = e.what();
    EXPECT_NE(msg.find("line 3"), std::string::npos) << msg;
    EXPECT_NE(msg.find("column"), std::string::npos) << msg;
  }
}

TEST(ProfileIo, SchemaDiagnosticsNameTheField) {
  try {
    load_profile_text(R"({"n": 2, "components": [{"label": "a", "h": 1}, {"label": "b", "h": "x"}]})");
    FAIL();
  } catch (const ProfileFormatError& e) {
    EXPECT_NE(std::string(e.what()).find("components[1].h"), std::string::npos) << e.what();
  }
  EXPECT_THROW(load_profile_text(R"({"components": []})"), ProfileFormatError);
  EXPECT_THROW(load_profile_text(R"({"n": 2, "components": {}})"), ProfileFormatError);
  EXPECT_THROW(load_profile("/nonexistent/profile.json"), ProfileFormatError);
}

TEST(ProfileIo, RejectsNEqualOne) {
  try {
    load_profile_text(R"({"n": 1, "components": [{"label": "a", "h": 1}]})");
    FAIL();
  } catch (const ProfileFormatError& e) {
    EXPECT_NE(std::string(e.what()).find("n >= 2"), std::string::npos);
  }
}

TEST(Config, ParsingAndValidation) {
  const auto c = config_from_json(nlohmann::json::parse(
      R"({"quad_order": 16, "cap": 1000, "seed": 7, "threads": 2, "tolerances": {"stokes": 1e-7}})"));
  EXPECT_EQ(c.quad_order, 16u);
  EXPECT_EQ(c.cap, 1000u);
  EXPECT_EQ(c.seed, 7u);
  EXPECT_EQ(c.threads, 2u);
  EXPECT_EQ(c.tol.stokes, 1e-7);
  EXPECT_EQ(c.tol.scaling, 1e-9);
  EXPECT_EQ(config_from_json(to_json(c)).seed, 7u);
  EXPECT_THROW(config_from_json(nlohmann::json::parse(R"({"bogus": 1})")), std::invalid_argument);
  EXPECT_THROW(config_from_json(nlohmann::json::parse(R"({"tolerances": {"stokes": -1}})")), std::invalid_argument);
  EXPECT_THROW(config_from_json(nlohmann::json::parse(R"({"quad_order": 0})")), std::invalid_argument);
  EXPECT_THROW(config_from_json(nlohmann::json::parse(R"({"seed": -3})")), std::invalid_argument);
  const auto sample = load_config(std::string(HELICAP_SAMPLES_DIR) + "/config.json");
  EXPECT_NO_THROW(sample.validate());
}

TEST(Pipeline, ShellExamples) {
  RunConfig cfg;
  const auto res = run_pipeline_shell(1.0, 2.0, 2, cfg);
  ASSERT_EQ(res.profile.size(), 2u);
  EXPECT_NEAR(res.profile.h(0), 16 * pi * pi, 1e-8);
  EXPECT_NEAR(res.profile.h(1), -pi * pi, 1e-9);
  EXPECT_EQ(res.recognition.forced_C, 1.0);
  EXPECT_EQ(res.residual_volume, 0.0);
  EXPECT_TRUE(cmd_pipeline_shell(1.0, 2.0, 2, cfg).pass());
  EXPECT_TRUE(cmd_pipeline_shell(1.0, 1.01, 2, cfg).pass());
  EXPECT_TRUE(cmd_pipeline_shell(0.5, 1.0, 3, cfg).pass());
  EXPECT_THROW(run_pipeline_shell(2.0, 1.0, 2, cfg), std::invalid_argument);
  EXPECT_THROW(run_pipeline_shell(1.0, 1.0, 2, cfg), std::invalid_argument);
}

TEST(Suite, CountZeroIsEmptyPass) {
  const auto rep = cmd_property_suite(0, 0, RunConfig{});
  EXPECT_TRUE(rep.pass());
}

TEST(Suite, DeterministicForFixedSeed) {
  RunConfig cfg;
  const auto a = cmd_property_suite(3, 10, cfg).deterministic();
  const auto b = cmd_property_suite(3, 10, cfg).deterministic();
  EXPECT_EQ(a.dump(), b.dump());
  EXPECT_TRUE(a.at("pass").get<bool>()) << a.dump(2);
}

TEST(Report, AppendsJsonLines) {
  const auto path = scratch() / "reports.jsonl";
  fs::remove(path);
  Report r("x", RunConfig{});
  r.check("ok", true);
  append_report(path.string(), r.finish());
  append_report(path.string(), r.finish());
  std::ifstream in(path);
  std::string line;
  int lines = 0;
  while (std::getline(in, line)) {
    const auto j = nlohmann::json::parse(line);
    EXPECT_TRUE(j.at("pass").get<bool>());
    EXPECT_EQ(j.at("config").at("seed"), 0);
    ++lines;
  }
  EXPECT_EQ(lines, 2);
}

TEST(Cli, HelicityComputeWritesLoadableProfile) {
  const auto prof = scratch() / "shell.json";
  const auto r = run_cli("helicity compute --region shell --r 1 --R 2 --dim 4 --profile-out \"" + prof.string() + "\"");
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_TRUE(j.at("pass").get<bool>());
  const auto p = load_profile(prof.string());
  ASSERT_EQ(p.size(), 2u);
  EXPECT_NEAR(p.h(0), 16 * pi * pi, 1e-8);

  const auto v = run_cli("recognition verify --profile \"" + prof.string() + "\"");
  EXPECT_EQ(v.code, 0) << v.err;
  EXPECT_EQ(nlohmann::json::parse(v.out).at("outputs").at("forced_C"), 1.0);
  EXPECT_EQ(run_cli("recognition keylemma --profile \"" + prof.string() + "\"").code, 0);
  EXPECT_EQ(run_cli("recognition c0 --profile \"" + prof.string() + "\"").code, 0);
  const auto csv = scratch() / "spectrum.csv";
  EXPECT_EQ(run_cli("--emit-csv \"" + csv.string() + "\" recognition spectrum --profile \"" + prof.string() + "\"").code, 0);
  EXPECT_NE(slurp(csv).find("assignment,lo,lo_closed,hi,separating"), std::string::npos);
}

TEST(Cli, SampleProfileVerifies) {
  const auto r = run_cli(std::string("recognition verify --profile \"") + HELICAP_SAMPLES_DIR + "/profile_worked.json\"");
  EXPECT_EQ(r.code, 0) << r.err;
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run_cli("stokes --region ball --r 1 --dim 4").code, 0);
  EXPECT_EQ(run_cli("pipeline --r 1 --R 2 --n 2").code, 0);
  EXPECT_EQ(run_cli("pipeline --r 2 --R 1 --n 2").code, 2);
  EXPECT_EQ(run_cli("nonsense").code, 2);
  EXPECT_EQ(run_cli("--quad-order notanumber pipeline").code, 2);
  const auto n1 = write("n1.json", R"({"n": 1, "components": [{"label": "a", "h": 1}]})");
  const auto r = run_cli("recognition verify --profile \"" + n1.string() + "\"");
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("n >= 2"), std::string::npos);
  const auto bad = write("bad.json", "{ \"n\": 2,\n \"components\": [ }");
  const auto b = run_cli("recognition verify --profile \"" + bad.string() + "\"");
  EXPECT_EQ(b.code, 2);
  EXPECT_NE(b.err.find("line 2"), std::string::npos) << b.err;
  const auto pos = write("pos.json", R"({"n": 2, "components": [{"label": "a", "h": 1}]})");
  EXPECT_EQ(run_cli("recognition verify --profile \"" + pos.string() + "\"").code, 2);
}

TEST(Cli, CapacityCommands) {
  const auto b = run_cli("capacity bounds --from ball:1 --to cylinder");
  ASSERT_EQ(b.code, 0) << b.err;
  const auto j = nlohmann::json::parse(b.out).at("outputs");
  EXPECT_EQ(j.at("lower"), 1.0);
  EXPECT_EQ(j.at("upper"), 1.0);
  EXPECT_TRUE(j.contains("derivation"));
  EXPECT_EQ(run_cli("capacity axioms --suite full").code, 0);
  EXPECT_EQ(run_cli("capacity counterexample").code, 0);
  EXPECT_EQ(run_cli("capacity bounds --from torus --to ball").code, 2);
}

TEST(Cli, DeterministicAndConfigFile) {
  const auto cfg = write("cfg.json", R"({"seed": 5, "quad_order": 24})");
  const auto a = run_cli("--config \"" + cfg.string() + "\" suite --count 5");
  const auto b = run_cli("--config \"" + cfg.string() + "\" suite --count 5");
  ASSERT_EQ(a.code, 0) << a.err;
  const auto ja = nlohmann::json::parse(a.out), jb = nlohmann::json::parse(b.out);
  EXPECT_EQ(strip_timing(ja).dump(), strip_timing(jb).dump());
  EXPECT_EQ(ja.at("config").at("seed"), 5);
  EXPECT_EQ(ja.at("config").at("quad_order"), 24);
  const auto c = run_cli("--config \"" + cfg.string() + "\" --seed 9 suite --count 0");
  EXPECT_EQ(nlohmann::json::parse(c.out).at("config").at("seed"), 9);
}

TEST(Cli, OutAppendsReport) {
  const auto path = scratch() / "cli_reports.jsonl";
  fs::remove(path);
  EXPECT_EQ(run_cli("--out \"" + path.string() + "\" capacity width --of ball:2").code, 0);
  EXPECT_EQ(run_cli("--out \"" + path.string() + "\" capacity thinness --of shell:1,1.05").code, 0);
  std::ifstream in(path);
  std::string line;
  int n = 0;
  while (std::getline(in, line)) ++n;
  EXPECT_EQ(n, 2);
}

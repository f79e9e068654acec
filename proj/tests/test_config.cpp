#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "mkdv/cli.hpp"
#include "mkdv/config.hpp"
#include "mkdv/errors.hpp"
#include "mkdv/serialization.hpp"

using namespace mkdv;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("mkdv_lab_cfg_" + name);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

int run_cli(const std::string& args, const fs::path& log) {
  const char* exe = std::getenv("MKDV_LAB_CLI");
  if (!exe) return -1;
  const int status = std::system((std::string(exe) + ' ' + args + " > " + log.string() + " 2>&1").c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST(Config, CanonicalValues) {
  EXPECT_EQ(canonical_value("dt", "0.001"), "0.001");
  EXPECT_EQ(canonical_value("dt", "1e-3"), "0.001");
  EXPECT_EQ(canonical_value("sign", "+1"), canonical_value("sign", "1"));
  EXPECT_EQ(canonical_value("eq", "mKdV2"), "mkdv2");
  EXPECT_THROW(canonical_value("dt", "-1"), ConfigError);
  EXPECT_THROW(canonical_value("dt", "abc"), ConfigError);
  EXPECT_THROW(canonical_value("sign", "2"), ConfigError);
  EXPECT_THROW(canonical_value("eq", "kdv"), ConfigError);
  EXPECT_THROW(canonical_value("no_such_key", "1"), ConfigError);
  EXPECT_THROW(canonical_value("ic", "plane_wave:1"), ConfigError);
  EXPECT_THROW(canonical_value("modes", "-1"), ConfigError);
}

TEST(Config, FileParsingAndFlagPrecedence) {
  const auto file = parse_config_file("# comment\neq = mKdV1\nT=0.5  # trailing\n\ndt=1e-3\nic=zero\n");
  EXPECT_EQ(canonical_value("eq", file.at("eq")), "mkdv1");
  EXPECT_EQ(file.at("T"), "0.5");
  EXPECT_THROW(parse_config_file("novalue\n"), ConfigError);
  const auto cfg = resolve_config("solve", file, {{"T", "0.25"}});
  EXPECT_DOUBLE_EQ(cfg.real("T"), 0.25);
  EXPECT_EQ(cfg.equation().variant, Variant::mKdV1);
  EXPECT_THROW(cfg.real("P0"), ConfigError);
}

TEST(Config, RequiredFieldsAndSubcommands) {
  EXPECT_THROW(resolve_config("solve", {}, {{"T", "1"}, {"dt", "0.1"}}), ConfigError);
  EXPECT_THROW(resolve_config("gauge", {}, {{"input", "x"}}), ConfigError);
  EXPECT_THROW(resolve_config("experiment", {}, {{"experiment", "bogus"}}), ConfigError);
  EXPECT_THROW(resolve_config("fly", {}, {}), ConfigError);
  EXPECT_NO_THROW(resolve_config("experiment", {}, {{"experiment", "conservation"}}));
}

TEST(Config, TextRoundTripAndEcho) {
  const auto cfg = cli::parse_config({"solve", "--ic", "plane_wave:2,1,0", "--T", "0.1", "--dt", "1e-3", "--sign",
                                      "-1", "--eq", "mKdV2"});
  EXPECT_EQ(cfg.subcommand, "solve");
  EXPECT_EQ(resolve_config("solve", parse_config_file(cfg.to_text()), {}), cfg);
  ExperimentReport r;
  cli::echo_config(cfg, r);
  EXPECT_EQ(cli::config_from_echo(r.parameters), cfg);
}

TEST(Config, ConfigFileFlag) {
  const auto dir = scratch("file");
  std::ofstream(dir / "run.cfg") << "ic=zero\nT=1\ndt=0.5\n";
  const auto cfg = cli::parse_config({"solve", "--config", (dir / "run.cfg").string(), "--dt", "0.25"});
  EXPECT_DOUBLE_EQ(cfg.real("dt"), 0.25);
  EXPECT_DOUBLE_EQ(cfg.real("T"), 1.0);
  EXPECT_THROW(cli::parse_config({"solve", "--config", (dir / "missing.cfg").string()}), ConfigError);
  EXPECT_THROW(cli::parse_config({"solve", "--nonsense", "1"}), ConfigError);
  fs::remove_all(dir);
}

TEST(Cli, SolveGaugeNormsEndToEnd) {
  if (!std::getenv("MKDV_LAB_CLI")) GTEST_SKIP() << "MKDV_LAB_CLI not set";
  const auto dir = scratch("e2e");
  const auto u = (dir / "u").string();
  ASSERT_EQ(run_cli("solve --ic random_smooth:0.3,5 --modes 16 --T 0.1 --dt 0.001 --stride 10 --eq mKdV --out " + u,
                    dir / "log1"), 0)
      << slurp(dir / "log1");
  EXPECT_TRUE(fs::exists(dir / "u" / "manifest.json"));
  EXPECT_TRUE(fs::exists(dir / "u" / "report.json"));
  const auto g = (dir / "g").string();
  ASSERT_EQ(run_cli("gauge --input " + u + " --gauge G1 --out " + g, dir / "log2"), 0) << slurp(dir / "log2");
  const auto traj = io::load_trajectory(dir / "g");
  EXPECT_EQ(traj.equation.variant, Variant::mKdV1);
  ASSERT_EQ(run_cli("norms --input " + g + " --norms 0:2,0.5:3", dir / "log3"), 0) << slurp(dir / "log3");
  EXPECT_EQ(slurp(dir / "log3").rfind("t,s,p,value\n", 0), 0u);
  fs::remove_all(dir);
}

TEST(Cli, ExitCodes) {
  if (!std::getenv("MKDV_LAB_CLI")) GTEST_SKIP() << "MKDV_LAB_CLI not set";
  const auto dir = scratch("codes");
  EXPECT_EQ(run_cli("solve --T 1", dir / "a"), cli::kConfigError);
  EXPECT_EQ(run_cli("solve --ic zero --T 1 --dt -2", dir / "b"), cli::kConfigError);
  EXPECT_EQ(run_cli("solve --ic random_smooth:0,9,16,3 --modes 64 --T 1 --dt 0.05 --out " + (dir / "c").string(),
                    dir / "c.log"),
            cli::kNumericalAbort)
      << slurp(dir / "c.log");
  EXPECT_EQ(run_cli("experiment --experiment conservation --T 0.05 --threshold.mass_tol 1e-30 --out " +
                        (dir / "d").string(),
                    dir / "d.log"),
            cli::kVerdictFailure)
      << slurp(dir / "d.log");
  EXPECT_NE(slurp(dir / "d.log").find("FAIL conservation.mass_drift"), std::string::npos);
  EXPECT_EQ(run_cli("experiment --experiment conservation --T 0.05 --out " + (dir / "e").string(), dir / "e.log"),
            cli::kOk)
      << slurp(dir / "e.log");
  fs::remove_all(dir);
}

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "nusamp_cli/cli.hpp"

using namespace nusamp::cli;
namespace fs = std::filesystem;

namespace {

int run(std::vector<std::string> args) {
  args.insert(args.begin(), "nusamp");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  return run_cli(static_cast<int>(argv.size()), argv.data());
}

std::string config(const std::string& name) { return std::string(NUSAMP_CONFIG_DIR) + "/" + name; }

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("nusamp_cli_test_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST(ParseComplex, AcceptsCommonSpellings) {
  EXPECT_EQ(parse_complex("0.3"), std::complex<double>(0.3, 0.0));
  EXPECT_EQ(parse_complex("0.3+0.2i"), std::complex<double>(0.3, 0.2));
  EXPECT_EQ(parse_complex("-1.5-2i"), std::complex<double>(-1.5, -2.0));
  EXPECT_EQ(parse_complex("2i"), std::complex<double>(0.0, 2.0));
  EXPECT_EQ(parse_complex("-i"), std::complex<double>(0.0, -1.0));
  EXPECT_EQ(parse_complex("1e-3+4.5e-1i"), std::complex<double>(1e-3, 0.45));
  EXPECT_EQ(parse_complex(" 1 + 2j "), std::complex<double>(1.0, 2.0));
}

TEST(ParseComplex, RejectsGarbage) {
  EXPECT_THROW(parse_complex(""), std::invalid_argument);
  EXPECT_THROW(parse_complex("abc"), std::invalid_argument);
  EXPECT_THROW(parse_complex("1+2k"), std::invalid_argument);
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run({}), kExitUsage);
  EXPECT_EQ(run({"frobnicate"}), kExitUsage);
  EXPECT_EQ(run({"sweep"}), kExitUsage);
  EXPECT_EQ(run({"sweep", "--config", "/nonexistent.json"}), kExitUsage);
  EXPECT_EQ(run({"verify-laplace", "--m", "1"}), kExitUsage);
  EXPECT_EQ(run({"reconstruct", "--config", config("uniform_gaussian.json"), "--z", "zz"}), kExitUsage);
}

TEST(Cli, ConfigErrorsExitTwo) {
  const fs::path dir = scratch("bad_config");
  std::ofstream(dir / "bad.json") << R"({"sequence": {"kind": "uniform"}, "signal": {"kind": "sinc", "sigma": 4}})";
  EXPECT_EQ(run({"sweep", "--config", (dir / "bad.json").string()}), kExitUsage);
}

TEST(Cli, SweepWritesCsvAndJson) {
  const fs::path dir = scratch("sweep");
  EXPECT_EQ(run({"sweep", "--config", config("uniform_gaussian.json"), "--out", dir.string(), "--threads", "2"}),
            kExitOk);
  const std::string csv = slurp(dir / "uniform_gaussian.csv");
  EXPECT_EQ(csv.rfind("N,N_star,max_error,bound,at_floor\n", 0), 0u);
  EXPECT_TRUE(fs::exists(dir / "uniform_gaussian.json"));
}

TEST(Cli, VerifyResiduePassesOnSmallWindow) {
  EXPECT_EQ(run({"verify-residue", "--config", config("perturbed_gaussian.json"), "--N", "3", "--z", "0.3+0.2i",
                 "--tol", "1e-10"}),
            kExitOk);
}

TEST(Cli, VerifyLaplace) {
  EXPECT_EQ(run({"verify-laplace", "--m", "2", "--N", "200"}), kExitOk);
  // Far from the asymptotic regime the ratio leaves the accepted band.
  EXPECT_EQ(run({"verify-laplace", "--m", "2", "--N", "0.01"}), kExitCheckFailed);
}

TEST(Cli, PointCommands) {
  EXPECT_EQ(run({"reconstruct", "--config", config("sine_type_gaussian.json"), "--N", "9", "--z", "0.2"}), kExitOk);
  EXPECT_EQ(run({"reconstruct", "--config", config("sine_type_gaussian.json"), "--N", "9", "--z", "4.2",
                 "--recenter"}),
            kExitOk);
  EXPECT_EQ(run({"bound", "--config", config("uniform_gaussian.json"), "--N", "7", "--z", "0.4"}), kExitOk);
  EXPECT_EQ(run({"bound", "--config", config("uniform_hyper_gaussian.json"), "--N", "7", "--z", "0.4"}), kExitOk);
}

TEST(Cli, GenerateSequenceWritesTable) {
  const fs::path dir = scratch("sequence");
  EXPECT_EQ(run({"generate-sequence", "--config", config("perturbed_gaussian.json"), "--M", "5", "--out",
                 dir.string(), "--file", "seq.csv"}),
            kExitOk);
  const std::string csv = slurp(dir / "seq.csv");
  EXPECT_EQ(csv.rfind("n,lambda\n-5,", 0), 0u);
  EXPECT_NE(csv.find("\n0,0\n"), std::string::npos);
}

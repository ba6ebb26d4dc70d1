#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "polylab_cli/cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, std::optional<std::string> env = std::nullopt) {
  std::ostringstream out, err;
  const int code = polylab::cli::run(args, out, err, env);
  return {code, out.str(), err.str()};
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

}  // namespace

TEST(Cli, FfcountPrintsBareCount) {
  auto r = run({"--seed", "1", "ffcount", "--q", "2", "--n", "4"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "3\n");
  EXPECT_EQ(run({"--seed", "1", "ffcount", "--q", "3", "--n", "3"}).out, "8\n");
  EXPECT_EQ(run({"--seed", "1", "ffcount", "--q", "6", "--n", "3"}).code, 2);
}

TEST(Cli, FactorJson) {
  auto r = run({"--seed", "1", "--format", "json", "factor", "--poly", "[1,1,1,1]", "--k", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["status"], "Reducible");
  EXPECT_EQ(j["factors"].size(), 2u);
  auto v = run({"--seed", "1", "--format", "json", "factor", "--poly", "[-1,-1,0,0,0,1]"});
  EXPECT_EQ(nlohmann::json::parse(v.out)["status"], "Irreducible");
}

TEST(Cli, CharpolyFromNestedRows) {
  auto r = run({"--seed", "1", "--format", "json", "charpoly", "--matrix", "[[0,1],[1,0]]"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  const auto text = j.dump();
  EXPECT_NE(text.find("-1"), std::string::npos) << text;
}

TEST(Cli, CensusSmallDegree) {
  auto r = run({"--seed", "1", "--format", "json", "census", "--n", "3"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(nlohmann::json::parse(r.out)["probability"], "1/2");
}

TEST(Cli, BoundsSandwich) {
  auto r = run({"--seed", "1", "--format", "json", "bounds", "--kind", "sandwich", "--k", "2", "--M", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(nlohmann::json::parse(r.out)["all_hold"].get<bool>());
}

TEST(Cli, ExperimentIsDeterministic) {
  const std::vector<std::string> args{"--seed",   "77",     "experiment", "--model",  "rademacher-poly", "--n", "9",
                                      "--statistic", "reducible", "--trials", "200", "--workers", "2"};
  const auto first = run(args);
  ASSERT_EQ(first.code, 0) << first.err;
  EXPECT_EQ(first.out.rfind("model,n,statistic,k,M,trials,successes,p_hat,ci_lo,ci_hi,seed,seconds\n", 0), 0u);
  for (int i = 0; i < 9; ++i) EXPECT_EQ(run(args).out, first.out);
}

TEST(Cli, ValidateExitCode) {
  auto r = run({"--seed", "3", "--format", "json", "experiment", "--mode", "validate", "--model", "rademacher-poly",
                "--n", "8", "--k", "1", "--M", "2", "--trials", "300"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(nlohmann::json::parse(r.out)["verdict"], "holds");
}

TEST(Cli, ControlPathGraph) {
  const auto dir = std::filesystem::temp_directory_path() / "polylab_cli_test";
  std::filesystem::create_directories(dir);
  {
    std::ofstream g(dir / "p3.json");
    g << R"({"n": 3, "edges": [[0, 1], [1, 2]]})";
  }
  auto r = run({"--seed", "1", "--format", "json", "control", "--graph", (dir / "p3.json").string()});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_FALSE(j["controllable"].get<bool>());
  EXPECT_EQ(j["automorphisms"], 2);
  std::filesystem::remove_all(dir);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"--bogus"}).code, 2);
  EXPECT_EQ(run({"ffcount", "--q", "2", "--n", "4", "--nope"}).code, 2);
  EXPECT_EQ(run({"--seed", "-4", "ffcount", "--q", "2", "--n", "4"}).code, 2);
  auto r = run({"--seed", "1", "factor"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("--poly"), std::string::npos);
  EXPECT_EQ(run({"--seed", "1", "experiment", "--model", "rademacher-poly", "--n", "5", "--statistic", "singular"}).code,
            2);
}

TEST(Cli, SeedResolution) {
  auto a = run({"--seed", "12", "ffcount", "--q", "2", "--n", "2"});
  EXPECT_NE(a.err.find("seed: 12"), std::string::npos);
  auto b = run({"ffcount", "--q", "2", "--n", "2"}, "99");
  EXPECT_NE(b.err.find("seed: 99"), std::string::npos);
  auto c = run({"--seed", "5", "ffcount", "--q", "2", "--n", "2"}, "99");
  EXPECT_NE(c.err.find("seed: 5"), std::string::npos);
  auto d = run({"ffcount", "--q", "2", "--n", "2"});
  EXPECT_NE(d.err.find("seed: "), std::string::npos);
  EXPECT_EQ(run({"ffcount", "--q", "2", "--n", "2"}, "x1").code, 2);
}

TEST(Cli, SampleStreamsAreSeeded) {
  const std::vector<std::string> args{"--seed", "4", "--format", "json", "sample", "--model", "iid-sign-matrix",
                                      "--n",    "3", "--count",  "3"};
  EXPECT_EQ(run(args).out, run(args).out);
  auto other = args;
  other[1] = "5";
  EXPECT_NE(run(args).out, run(other).out);
}

TEST(Cli, OutputFile) {
  const auto path = std::filesystem::temp_directory_path() / "polylab_cli_out.txt";
  auto r = run({"--seed", "1", "--out", path.string(), "ffcount", "--q", "2", "--n", "4"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  EXPECT_EQ(read_file(path), "3\n");
  std::filesystem::remove(path);
  EXPECT_EQ(run({"--seed", "1", "--out", "/nonexistent-dir/x", "ffcount", "--q", "2", "--n", "4"}).code, 2);
}

// Help text is compared against files under tests/snapshots; set
// POLYLAB_UPDATE_SNAPSHOTS=1 to rewrite them.
TEST(Cli, HelpSnapshots) {
  const std::filesystem::path dir = POLYLAB_SNAPSHOT_DIR;
  const bool update = std::getenv("POLYLAB_UPDATE_SNAPSHOTS") != nullptr;
  for (std::string sub : {"", "factor", "charpoly", "sample", "experiment", "bounds", "ffcount", "control", "census"}) {
    std::vector<std::string> args;
    if (!sub.empty()) args.push_back(sub);
    args.push_back("--help");
    const auto r = run(args);
    EXPECT_EQ(r.code, 0);
    const auto file = dir / ("help_" + (sub.empty() ? std::string("main") : sub) + ".txt");
    if (update) {
      std::ofstream(file, std::ios::binary) << r.out;
      continue;
    }
    ASSERT_TRUE(std::filesystem::exists(file)) << file;
    EXPECT_EQ(r.out, read_file(file)) << sub;
  }
}

#include <gtest/gtest.h>

#include <algorithm>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "conncert/cli.hpp"

namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "conncert");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  Run r;
  r.code = conncert::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

bool has_line(const std::string& text, const std::string& key, const std::string& value) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream fields(line);
    std::string k, v;
    fields >> k >> v;
    if (k == key && v == value) return true;
  }
  return false;
}

}  // namespace

TEST(Cli, AnalyzePetersenTable) {
  const auto r = run({"analyze", "--named", "petersen"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(has_line(r.out, "n", "10"));
  EXPECT_TRUE(has_line(r.out, "delta", "3"));
  EXPECT_TRUE(has_line(r.out, "girth", "5"));
  EXPECT_TRUE(has_line(r.out, "omega", "2"));
  EXPECT_TRUE(has_line(r.out, "kappa", "3"));
  EXPECT_TRUE(has_line(r.out, "kappa'", "3"));
  EXPECT_TRUE(has_line(r.out, "mu_{n-1}", "2.000000"));
}

TEST(Cli, AnalyzeJson) {
  const auto r = run({"--json", "analyze", "--g6", "C~"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["graph6"], "C~");
  EXPECT_EQ(j["params"]["n"], 4);
  EXPECT_EQ(j["params"]["algebraic_connectivity"], 4.0);
}

TEST(Cli, CertifyPetersen) {
  const auto r = run({"certify", "--edge", "-k", "3", "--named", "petersen", "--oracle"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("Certified"), std::string::npos);
  EXPECT_NE(r.out.find("small_order"), std::string::npos);
  EXPECT_NE(r.out.find("(agrees)"), std::string::npos);

  const auto j = run({"--json", "certify", "--vertex", "-k", "2", "--named", "cycle:8", "--oracle"});
  ASSERT_EQ(j.code, 0) << j.err;
  const auto doc = nlohmann::json::parse(j.out);
  EXPECT_EQ(doc["verdict"], "certified");
  EXPECT_EQ(doc["oracle"]["value"], 2);
}

TEST(Cli, CertifyUsageErrors) {
  EXPECT_EQ(run({"certify", "-k", "3", "--named", "petersen"}).code, 2);
  EXPECT_EQ(run({"certify", "--edge", "--vertex", "-k", "3", "--named", "petersen"}).code, 2);
  EXPECT_EQ(run({"certify", "--edge", "--named", "petersen"}).code, 2);
  EXPECT_EQ(run({"certify", "--edge", "-k", "4", "--named", "petersen"}).code, 2);
  EXPECT_EQ(run({"certify", "--edge", "-k", "2", "--named", "petersen", "--g6", "C~"}).code, 2);
  EXPECT_EQ(run({"certify", "--edge", "-k", "2", "--g6", "C~~"}).code, 2);
}

TEST(Cli, SpectrumMatrices) {
  const auto r = run({"--json", "spectrum", "--named", "complete:4", "--matrix", "signless"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["values"], nlohmann::json({6.0, 2.0, 2.0, 2.0}));
  EXPECT_EQ(run({"spectrum", "--named", "cycle:4", "--matrix", "pencil", "--b", "0"}).code, 2);
  EXPECT_EQ(run({"spectrum", "--named", "cycle:4", "--matrix", "hessian"}).code, 2);
}

TEST(Cli, ManyGraphsGiveJsonLines) {
  const auto path = testing::TempDir() + "conncert_cli_two.g6";
  {
    std::ofstream f(path);
    f << "C~\nBw\n";
  }
  const auto r = run({"--json", "spectrum", path});
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream in(r.out);
  std::string line;
  int lines = 0;
  while (std::getline(in, line)) {
    EXPECT_NO_THROW(nlohmann::json::parse(line));
    ++lines;
  }
  EXPECT_EQ(lines, 2);
}

TEST(Cli, Gen) {
  const auto r = run({"gen", "--exhaustive", "4", "--from", "4", "--connected", "--min-degree", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 10);

  const auto a = run({"gen", "--gnp", "20", "0.3", "1", "--seed", "42"});
  EXPECT_EQ(a.out, "SGweID?_hCo_OM?c_@?D?EPp_?`I?s?Io\n");
  EXPECT_EQ(run({"gen", "--gnp", "20", "0.3", "1"}).code, 2);
  EXPECT_EQ(run({"gen", "--named", "petersen"}).out, "IheA@GUAo\n");
  EXPECT_EQ(run({"gen"}).code, 2);
  EXPECT_EQ(run({"gen", "--exhaustive", "9"}).code, 2);
}

TEST(Cli, VerifyCleanAndMutated) {
  const auto clean = run({"--json", "verify", "--exhaustive", "4", "--all", "--seed", "1"});
  ASSERT_EQ(clean.code, 0) << clean.err;
  const auto j = nlohmann::json::parse(clean.out);
  EXPECT_EQ(j["clean"], true);
  EXPECT_NE(clean.err.find("elapsed"), std::string::npos);

  const auto mutated = run({"verify", "--exhaustive", "5", "--properties", "soundness", "--threshold-scale", "0.5"});
  EXPECT_EQ(mutated.code, 1);
  EXPECT_NE(mutated.out.find("COUNTEREXAMPLES FOUND"), std::string::npos);

  const auto table = run({"verify", "--named", "petersen", "--serial"});
  EXPECT_EQ(table.code, 0);
  EXPECT_NE(table.out.find("CLEAN"), std::string::npos);
}

TEST(Cli, VerifyUsageErrors) {
  EXPECT_EQ(run({"verify", "--exhaustive", "4", "--all", "--properties", "turan"}).code, 2);
  EXPECT_EQ(run({"verify", "--exhaustive", "4", "--properties", "bogus"}).code, 2);
  EXPECT_EQ(run({"verify", "--gnp", "10", "0.5", "3"}).code, 2);
  EXPECT_EQ(run({"verify", "--exhaustive", "4", "--named", "petersen"}).code, 2);
  EXPECT_EQ(run({"verify", "--file", "/nonexistent/x.g6"}).code, 2);
  EXPECT_EQ(run({"verify", "--exhaustive", "4", "--bogus-flag"}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
}

TEST(Cli, HelpExitsZero) { EXPECT_EQ(run({"--help"}).code, 0); }

TEST(Cli, VerifyJsonIsDeterministic) {
  const std::vector<std::string> args{"--json", "verify", "--gnp", "9", "0.5", "4", "--seed", "3", "--all"};
  EXPECT_EQ(run(args).out, run(args).out);
}

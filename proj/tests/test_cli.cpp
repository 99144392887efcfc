#include <gtest/gtest.h>

#include <cstdlib>
#include <nlohmann/json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"

using namespace foldweyl;
using nlohmann::json;

namespace {

struct CliRun {
  int code = -1;
  std::string out;
  std::string err;
  json parsed() const { return json::parse(out); }
};

CliRun run(std::vector<std::string> args, const std::string& input = "") {
  args.insert(args.begin(), "foldweyl");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::istringstream in(input);
  std::ostringstream out, err;
  CliRun r;
  r.code = run_cli(static_cast<int>(argv.size()), argv.data(), in, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

const char* kA2Twisted = R"({"type":"A","rank":2,"m":2,"twisted":true,"factors":[{"node":1,"param":"3","mult":1}]})";

}  // namespace

TEST(Cli, FoldA2) {
  const CliRun r = run({"fold", "--type", "A", "--rank", "2", "--m", "2"});
  ASSERT_EQ(r.code, kOk) << r.err;
  const json j = r.parsed();
  EXPECT_EQ(j["g0"], "A1");
  EXPECT_EQ(j["dims"], json({3, 5}));
  EXPECT_EQ(j["g1_hw"], "2θ_s");
  EXPECT_EQ(j["g1_highest_weight"], json({4}));
}

TEST(Cli, FoldTriality) {
  const CliRun r = run({"fold", "--type", "D", "--rank", "4", "--m", "3"});
  ASSERT_EQ(r.code, kOk) << r.err;
  const json j = r.parsed();
  EXPECT_EQ(j["g0"], "G2");
  EXPECT_EQ(j["dims"], json({14, 7, 7}));
  EXPECT_EQ(j["folded_nodes"], json({1, 2}));
}

TEST(Cli, UnsupportedFoldIsAnInputError) {
  EXPECT_EQ(run({"fold", "--type", "B", "--rank", "3", "--m", "2"}).code, kInputError);
  EXPECT_EQ(run({"frobnicate"}).code, kInputError);
}

TEST(Cli, MalformedJsonIsAnInputError) {
  EXPECT_EQ(run({"weyl"}, "{not json").code, kInputError);
  EXPECT_EQ(run({"weyl"}, R"({"type":"A","rank":2,"factors":[{"node":3,"param":"1"}]})").code, kInputError);
  EXPECT_EQ(run({"weyl"}, R"({"type":"A","rank":1,"factors":[{"node":1,"param":"1/0"}]})").code, kInputError);
}

TEST(Cli, TableGapExitCode) {
  const CliRun r = run({"weyl"}, R"({"type":"E","rank":6,"factors":[{"node":4,"param":"1"}]})");
  EXPECT_EQ(r.code, kTableGap);
  EXPECT_NE(r.err.find("table gap"), std::string::npos);
}

TEST(Cli, ResourceLimitExitCode) {
  setenv("FOLDWEYL_MAX_COMPONENT", "3", 1);
  const CliRun r = run({"oracle"}, R"({"type":"A","rank":1,"factors":[{"node":1,"param":"1","mult":3}]})");
  unsetenv("FOLDWEYL_MAX_COMPONENT");
  EXPECT_EQ(r.code, kResourceLimit);
}

TEST(Cli, FiberAndReduceRoundTrip) {
  const CliRun f = run({"fiber", "--tuple", kA2Twisted});
  ASSERT_EQ(f.code, kOk) << f.err;
  const json j = f.parsed();
  EXPECT_EQ(j["size"], 2);
  for (const auto& pre : j["fiber"]) {
    const CliRun r = run({"reduce", "--tuple", pre.dump()});
    ASSERT_EQ(r.code, kOk) << r.err;
    const json red = r.parsed();
    EXPECT_EQ(red["twisted"], true);
    EXPECT_EQ(red["factors"][0]["node"], 1);
    EXPECT_EQ(red["factors"][0]["param"]["c"][0], "3/1");
  }
}

TEST(Cli, WeylWithOracleAgrees) {
  const CliRun r = run({"weyl", "--oracle", "--tuple", kA2Twisted});
  ASSERT_EQ(r.code, kOk) << r.err;
  const json j = r.parsed();
  EXPECT_EQ(j["dim"], 3);
  EXPECT_EQ(j["algebra"], "A1");
  EXPECT_EQ(j["agree"], true);
  EXPECT_EQ(j["oracle"]["dimension"], 3);
}

TEST(Cli, OutputIsDeterministic) {
  const std::string t = R"({"type":"A","rank":3,"m":2,"twisted":true,"factors":[{"node":1,"param":"2"},{"node":2,"param":"-1"}]})";
  const CliRun a = run({"weyl", "--tuple", t});
  const CliRun b = run({"weyl", "--tuple", t});
  ASSERT_EQ(a.code, kOk) << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.parsed()["dim"], 24);
}

TEST(Cli, TruncateAndUntwist) {
  const CliRun r = run({"truncate", "--type", "A", "--rank", "2", "--m", "2", "--twisted", "--a", "1", "--N", "2",
                     "--untwist"});
  ASSERT_EQ(r.code, kOk) << r.err;
  const json j = r.parsed();
  EXPECT_EQ(j["dimension"], 16);
  EXPECT_EQ(j["untwist"]["isomorphism"], true);
}

TEST(Cli, CrtReportsBlocks) {
  const CliRun r = run({"crt", "--type", "A", "--rank", "1", "--a", "1", "2", "--N", "2"});
  ASSERT_EQ(r.code, kOk) << r.err;
  const json j = r.parsed();
  EXPECT_EQ(j["ok"], true);
  EXPECT_EQ(j["blocks"].size(), 2u);
}

TEST(Cli, VerifySubsetPasses) {
  const CliRun r = run({"verify", "--only", "1,2,4"});
  EXPECT_EQ(r.code, kOk) << r.err;
  const json j = r.parsed();
  EXPECT_EQ(j["passed"], true);
  EXPECT_EQ(j["criteria"].size(), 3u);
}

TEST(Cli, InjectedFaultFailsVerification) {
  const CliRun r = run({"verify", "--only", "8", "--inject-fault", "jacobi"});
  EXPECT_EQ(r.code, kVerificationFailed);
  EXPECT_NE(r.err.find("FAIL [8]"), std::string::npos);
  EXPECT_EQ(r.parsed()["passed"], false);
}

#include "heegaard/cli.hpp"

#include <filesystem>
#include <sstream>

#include <gmock/gmock.h>
#include <gtest/gtest.h>

#include "heegaard/io.hpp"

namespace heegaard {
namespace {

namespace fs = std::filesystem;
using testing::HasSubstr;

const fs::path kFixtures = HEEGAARD_FIXTURE_DIR;

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const char* name) { return (kFixtures / name).string(); }

class CliTest : public testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("heegaard_cli_" + std::string(testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const char* name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

TEST_F(CliTest, CheckCertifiesCoincidentSystems) {
  const auto r = run({"check", fixture("coincident_g3.json")});
  EXPECT_EQ(r.code, 0);
  const auto j = Json::parse(r.out);
  EXPECT_EQ(j["verdict"], "EvenParityCertified");
  EXPECT_EQ(j["message"], "unstabilized: certified by even parity condition");
  EXPECT_TRUE(j["witness"].is_null());

  const auto text = run({"check", fixture("coincident_g3.json"), "--format", "text"});
  EXPECT_THAT(text.out, HasSubstr("unstabilized: certified by even parity condition"));
}

TEST_F(CliTest, CheckReportsOddWitness) {
  const auto r = run({"check", fixture("standard_odd.json")});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(Json::parse(r.out)["witness"], Json({1, 1}));
}

TEST_F(CliTest, CheckRejectsInvalidInput) {
  EXPECT_EQ(run({"check", fixture("dependent.json")}).code, 2);
  EXPECT_EQ(run({"check", fixture("not_isotropic.json")}).code, 2);
  EXPECT_EQ(run({"check", fixture("missing.json")}).code, 2);
  EXPECT_EQ(run({"check", fixture("theta.json")}).code, 2);
}

TEST_F(CliTest, CheckAcceptsMatrixOnlyForm) {
  const auto r = run({"check", fixture("matrix_only.json")});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(Json::parse(r.out)["witness"], Json({1, 1}));
  EXPECT_EQ(run({"evenize", fixture("matrix_only.json")}).code, 2);
}

TEST_F(CliTest, EvenizeAlreadyEvenEchoesInput) {
  const auto r = run({"evenize", fixture("coincident_g3.json"), "--out", path("seq.json")});
  ASSERT_EQ(r.code, 0);
  const auto j = Json::parse(r.out);
  EXPECT_EQ(j["steps"], 0);
  EXPECT_EQ(j["final_diagram"], read_json_file(fixture("coincident_g3.json")));
  EXPECT_TRUE(fs::exists(path("seq.final.json")));
}

TEST_F(CliTest, EvenizeIdentityTakesTwoStepsAndOutputChecks) {
  const auto r = run({"evenize", fixture("identity_g2.json"), "--out", path("seq.json"), "--final", path("final.json"),
                      "--trajectory"});
  ASSERT_EQ(r.code, 0);
  const auto j = Json::parse(r.out);
  EXPECT_EQ(j["steps"], 2);
  EXPECT_EQ(j["initial_rank"], 2);
  const auto seq = read_json_file(path("seq.json"));
  EXPECT_EQ(seq["steps"].size(), 2U);
  EXPECT_EQ(seq["trajectory"].size(), 3U);
  EXPECT_EQ(run({"check", path("final.json")}).code, 0);
}

TEST_F(CliTest, EvenizeRandomDiagramStepsMatchRank) {
  for (const char* seed : {"1", "2", "3", "4"}) {
    ASSERT_EQ(run({"random", "--genus", "6", "--seed", seed, "--out", path("d.json")}).code, 0);
    const auto j = Json::parse(run({"evenize", path("d.json")}).out);
    EXPECT_EQ(j["steps"], j["initial_rank"]);
    EXPECT_EQ(j["certificate"]["verdict"], "EvenParityCertified");
  }
}

TEST_F(CliTest, PantsPropagateTheta) {
  const auto r = run({"pants", "propagate", fixture("theta.json"), "--dot", path("theta.dot")});
  EXPECT_EQ(r.code, 0);
  const auto j = Json::parse(r.out);
  EXPECT_TRUE(j["all_red"].get<bool>());
  EXPECT_EQ(j["firings"], 1);
  EXPECT_THAT(read_text_file(path("theta.dot")), HasSubstr("stage 1"));
}

TEST_F(CliTest, PantsPropagateBlueCycleIsNegative) {
  const auto r = run({"pants", "propagate", fixture("k4_blue_cycle.json")});
  EXPECT_EQ(r.code, 1);
  const auto j = Json::parse(r.out);
  EXPECT_FALSE(j["all_red"].get<bool>());
  EXPECT_FALSE(j["initial_coloring_valid"].get<bool>());
}

TEST_F(CliTest, PantsCompleteTheta) {
  const auto r = run({"pants", "complete", fixture("theta_parities.json")});
  ASSERT_EQ(r.code, 0);
  const auto j = Json::parse(r.out);
  EXPECT_EQ(j["parities"][1]["parity"], 1);
  EXPECT_EQ(j["parities"][1]["color"], "blue");
  EXPECT_EQ(run({"pants", "complete", fixture("theta.json")}).code, 2);
  EXPECT_EQ(run({"pants", "complete", fixture("k4_blue_cycle.json")}).code, 2);
}

TEST_F(CliTest, PantsRejectsMalformedGraph) {
  write_text_file(path("bad.json"), R"({"genus":2,"edges":[{"id":1,"ends":[1,2]}],"red":[1]})");
  EXPECT_EQ(run({"pants", "propagate", path("bad.json")}).code, 2);
}

TEST_F(CliTest, RandomGraphValidatesUnderPants) {
  ASSERT_EQ(run({"random", "--genus", "2", "--kind", "graph", "--seed", "5", "--out", path("g.json")}).code, 0);
  const auto r = run({"pants", "propagate", path("g.json")});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(Json::parse(r.out)["initial_coloring_valid"].get<bool>());
}

TEST_F(CliTest, RandomIsDeterministicAndValidatesFlags) {
  ASSERT_EQ(run({"random", "--genus", "3", "--seed", "7", "--out", path("a.json")}).code, 0);
  ASSERT_EQ(run({"--seed", "7", "random", "--genus", "3", "--out", path("b.json")}).code, 0);
  EXPECT_EQ(read_text_file(path("a.json")), read_text_file(path("b.json")));
  EXPECT_EQ(run({"random", "--genus", "1"}).code, 2);
  EXPECT_EQ(run({"random", "--genus", "3", "--kind", "torus"}).code, 2);
  EXPECT_EQ(run({"random"}).code, 2);
}

TEST_F(CliTest, SelftestExitCodes) {
  const auto ok = run({"selftest", "--trials", "100", "--seed", "3", "--format", "text"});
  EXPECT_EQ(ok.code, 0);
  EXPECT_THAT(ok.out, HasSubstr("twist_parity_rule"));
  EXPECT_EQ(run({"selftest", "--trials", "0"}).code, 2);
  const auto mutated = run({"selftest", "--trials", "20", "--mutate", "transvection"});
  EXPECT_EQ(mutated.code, 1);
  EXPECT_FALSE(Json::parse(mutated.out)["failures"].empty());
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"check", fixture("coincident_g3.json"), "--format", "xml"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST_F(CliTest, RecordIsReplayable) {
  const std::vector<std::string> args{"evenize", fixture("standard_odd.json"), "--out", path("seq.json"),
                                      "--record", "--record-dir", path("runs")};
  const auto first = run(args);
  ASSERT_EQ(first.code, 0);
  std::vector<fs::path> records;
  for (const auto& e : fs::recursive_directory_iterator(path("runs"))) {
    if (e.path().filename() == "record.json") records.push_back(e.path());
  }
  ASSERT_EQ(records.size(), 1U);
  const auto record = read_json_file(records.front());
  EXPECT_EQ(record["input_digest"], sha256_hex(read_text_file(fixture("standard_odd.json"))));
  EXPECT_EQ(record["exit_code"], 0);

  std::vector<std::string> replay;
  for (const auto& a : record["command"]) replay.push_back(a.get<std::string>());
  fs::remove(path("seq.json"));
  const auto again = run(replay);
  EXPECT_EQ(again.code, record["exit_code"].get<int>());
  EXPECT_EQ(again.out, record["outputs"]["stdout"].get<std::string>());
  for (const auto& [file, contents] : record["outputs"]["files"].items()) {
    EXPECT_EQ(read_text_file(file), contents.get<std::string>()) << file;
  }
  // Same command and input land in the same content-addressed directory.
  ASSERT_EQ(run(args).code, 0);
  std::size_t count = 0;
  for (const auto& e : fs::directory_iterator(path("runs"))) count += e.is_directory();
  EXPECT_EQ(count, 1U);
}

TEST(Sha256, KnownVector) {
  EXPECT_EQ(sha256_hex("abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

}  // namespace
}  // namespace heegaard

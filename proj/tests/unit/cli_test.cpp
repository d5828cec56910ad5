#include "plqo/decide.hpp"
#include "plqo/structure_io.hpp"
#include "plqo/syntax.hpp"
#include "plqo_cli/cli.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace plqo {
namespace {

namespace fs = std::filesystem;

struct Result {
  int code;
  std::string out;
  std::string err;
};

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("plqo_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  Result run(std::vector<std::string> args) {
    args.insert(args.begin(), "plqo");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
  }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

TEST_F(Cli, CheckValid) {
  const Result r = run({"check", "O(T)"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("VALID\n", 0), 0U);
  EXPECT_NE(r.out.find("RR 1"), std::string::npos);
}

TEST_F(Cli, CheckInvalidWritesReloadableCountermodel) {
  const std::string formula = "(O(B1) & O(B2)) <-> O(B1 & B2)";
  const std::string cm = path("cm.json");
  const Result r = run({"check", formula, "-o", cm});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.out.rfind("INVALID\n", 0), 0U);
  const auto j = read_json_file(cm);
  EXPECT_EQ(j.at("generic").at("nc"), nlohmann::json::parse(R"([["B1","B2"]])"));
  const Result e = run({"eval", "--model", cm, "--formula", "!(" + formula + ")"});
  EXPECT_EQ(e.code, 0);
  EXPECT_EQ(e.out, "TRUE\n");
}

TEST_F(Cli, VerdictMatchesLibrary) {
  for (const char* f : {"O(B1) -> O(!B1)", "P(B1) >= 1/2", "O(B1 & B2) -> P(B1 & B2) >= 0",
                        "P(B1) = x1 -> P(B1) < x1"}) {
    const Result r = run({"check", f, "-o", path("cm.json")});
    EXPECT_EQ(r.code, check_valid(parse_plqo(f)).valid ? 0 : 1) << f;
  }
}

TEST_F(Cli, Entail) {
  const Result r =
      run({"entail", "--premise", "O(B1 & B2)", "--conclusion", "P(B1 & B2) >= 0"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("HYP"), std::string::npos);
}

TEST_F(Cli, Sat) {
  const std::string model = path("m.json");
  EXPECT_EQ(run({"sat", "O(B1) & P(B1) = 1/3", "-o", model}).code, 0);
  EXPECT_EQ(run({"eval", "--model", model, "--formula", "P(B1) = 1/3"}).code, 0);
  EXPECT_EQ(run({"sat", "P(B1) < 0"}).code, 1);
}

TEST_F(Cli, GenmodelThenEval) {
  const std::string model = path("g.json");
  const Result g = run({"genmodel", "--symbols", "B1", "B2", "--nc", "B1,B2", "--masses", "1/2",
                        "0", "1/4", "1/4", "-o", model});
  ASSERT_EQ(g.code, 0) << g.err;
  const Result e = run({"eval", "--model", model, "--prob", "B2", "--formula", "!O(B1 & B2)"});
  EXPECT_EQ(e.code, 0);
  EXPECT_EQ(e.out, "P(B2) = 1/2\nTRUE\n");
  const Result f = run({"eval", "--model", model, "--float", "--formula", "P(B2) = 1/2"});
  EXPECT_EQ(f.code, 0);
}

TEST_F(Cli, GenmodelToStdout) {
  const Result g = run({"genmodel", "--symbols", "B1", "--masses", "1", "0"});
  EXPECT_EQ(g.code, 0);
  EXPECT_EQ(nlohmann::json::parse(g.out).at("generic").at("masses"),
            nlohmann::json::parse(R"(["1","0"])"));
}

TEST_F(Cli, TranslateEssentialAnf) {
  const Result t = run({"translate", "O(B1 & B2)"});
  EXPECT_EQ(t.code, 0);
  EXPECT_NE(t.out.find("xp[B1,B2] = 0"), std::string::npos);
  EXPECT_EQ(run({"essential", "B1 | (B2 & !B2)"}).out, "{B1}\n");
  EXPECT_EQ(run({"anf", "B1 <-> B2"}).out, "1 + B1 + B2\n");
}

TEST_F(Cli, ProveSchemas) {
  const Result r = run({"prove", "--schema", "fig1", "--arg", "B1 & B2", "--arg", "B2 & B1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("7  O(B1 & B2) <-> O(B2 & B1)  MP 4,6"), std::string::npos);
  const Result j = run({"--json", "prove", "--schema", "fig2"});
  EXPECT_EQ(j.code, 0);
  EXPECT_EQ(nlohmann::json::parse(j.out).at("lines").size(), 4U);
}

TEST_F(Cli, JsonVerdicts) {
  const Result v = run({"--json", "check", "O(T)"});
  EXPECT_EQ(v.code, 0);
  const auto j = nlohmann::json::parse(v.out);
  EXPECT_EQ(j.at("verdict"), "VALID");
  EXPECT_EQ(j.at("proof").at("lines").size(), 2U);
  const Result i = run({"--json", "check", "P(B1) >= 1/2", "-o", path("cm.json")});
  EXPECT_EQ(i.code, 1);
  EXPECT_EQ(nlohmann::json::parse(i.out).at("verdict"), "INVALID");
  const Result u = run({"--json", "sat", "P(B1) < 0"});
  EXPECT_EQ(u.code, 1);
  EXPECT_EQ(nlohmann::json::parse(u.out).at("verdict"), "UNSAT");
}

TEST_F(Cli, VerboseShowsConstraints) {
  const Result r = run({"-v", "check", "O(T)"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("x[T] = 1"), std::string::npos);
}

TEST_F(Cli, FormulaFromFile) {
  const std::string f = path("f.txt");
  std::ofstream(f) << "O(T)\n";
  EXPECT_EQ(run({"check", "@" + f}).code, 0);
}

TEST_F(Cli, ErrorsAndExitCodes) {
  const Result p = run({"check", "O(B1"});
  EXPECT_EQ(p.code, 2);
  EXPECT_EQ(p.err.rfind("error[PARSE]:", 0), 0U);
  const Result u = run({"frobnicate"});
  EXPECT_EQ(u.code, 2);
  EXPECT_EQ(u.err.rfind("error[USAGE]:", 0), 0U);
  const Result b = run({"--budget", "1", "check", "P(B1 & B2) >= 0"});
  EXPECT_EQ(b.code, 3);
  EXPECT_EQ(b.err.rfind("error[BUDGET]:", 0), 0U);
  EXPECT_EQ(run({"check", "P(B1) = x1 * x1"}).code, 3);
  EXPECT_EQ(run({"eval", "--model", path("missing.json"), "--formula", "O(T)"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST_F(Cli, BudgetFromEnvironment) {
  ::setenv("PLQO_BUDGET_SYMBOLS", "1", 1);
  const Result b = run({"check", "P(B1 & B2) >= 0"});
  ::unsetenv("PLQO_BUDGET_SYMBOLS");
  EXPECT_EQ(b.code, 3);
}

}  // namespace
}  // namespace plqo

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "ccgolog/bundled.hpp"
#include "ccgolog/ccgolog.hpp"
#include "ccgolog/cli.hpp"

using namespace ccgolog;
namespace fs = std::filesystem;
using nlohmann::json;

namespace {

const std::string kScenarios = CCGOLOG_SCENARIO_DIR;
const std::string kGolden = CCGOLOG_GOLDEN_DIR;

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err, bundled_scenarios());
  return {code, out.str(), err.str()};
}

std::string scenario_file(const std::string& name) { return kScenarios + "/" + name; }

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() / ("ccgolog-test-" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
                                         "-" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string write(const std::string& name, const std::string& text) const {
    std::ofstream(path_ / name) << text;
    return (path_ / name).string();
  }
  std::string file(const std::string& name) const { return (path_ / name).string(); }

 private:
  fs::path path_;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

ProjectionResult run_bundled(std::string_view name) {
  for (const auto& s : bundled_scenarios()) {
    if (s.name == name) {
      Expansion e = prepare(s.domain, s.program);
      return project(e.program, e.domain, 100000);
    }
  }
  throw std::out_of_range(std::string(name));
}

}  // namespace

TEST(FormatTrace, TextExample) {
  std::string text = format_trace(make_trace_document(run_bundled("robot1d")), TraceFormat::kText);
  EXPECT_EQ(text,
            "0.000000\tstartGo(50)\n"
            "20.000000\twaitFor(= robotLoc 1000)\n"
            "20.000000\tendGo\n"
            "# status completed\n"
            "# steps 3\n"
            "# final robotLoc (constant 1000)\n");
}

TEST(FormatTrace, JsonExample) {
  json doc = json::parse(format_trace(make_trace_document(run_bundled("robot1d")), TraceFormat::kJson));
  EXPECT_EQ(doc["status"], "completed");
  EXPECT_EQ(doc["entries"].size(), 3u);
  EXPECT_EQ(doc["entries"][1]["t_rational"], "20/1");
  EXPECT_EQ(doc["entries"][1]["t"], 20.0);
  EXPECT_EQ(doc["entries"][1]["action"], "waitFor");
  EXPECT_EQ(doc["entries"][1]["args"], json::array({"(= robotLoc 1000)"}));
  EXPECT_EQ(doc["entries"][0]["args"], json::array({"50"}));
  EXPECT_FALSE(doc.contains("reason"));
}

TEST(FormatTrace, EmptyTrace) {
  Domain d = parse_domain("");
  json doc = json::parse(format_trace(make_trace_document(project(Program::nil(), d, 10)), TraceFormat::kJson));
  EXPECT_EQ(doc["status"], "completed");
  EXPECT_EQ(doc["entries"], json::array());
  EXPECT_EQ(doc["steps"], 0);
  EXPECT_EQ(doc["final"], json::object());
}

TEST(FormatTrace, HiddenFlagsAreNotReported) {
  Domain d = parse_domain("(action a ()) (action b ())");
  Expansion e = expand_macros(parse_program("(par a b)"), d);
  json doc = json::parse(format_trace(make_trace_document(project(e.program, e.domain, 100)), TraceFormat::kJson));
  EXPECT_EQ(doc["final"], json::object());
}

TEST(FormatTrace, BlockedJsonCarriesTheReason) {
  json doc = json::parse(format_trace(make_trace_document(run_bundled("blocked")), TraceFormat::kJson));
  EXPECT_EQ(doc["status"], "blocked");
  ASSERT_TRUE(doc.contains("reason"));
  EXPECT_NE(doc["reason"].get<std::string>().find("(> robotLoc 1000)"), std::string::npos);
}

TEST(Golden, BundledScenarioTraces) {
  for (const auto& s : bundled_scenarios()) {
    std::string name(s.name);
    json expected = json::parse(slurp(kGolden + "/" + name + ".json"));
    json actual = json::parse(format_trace(make_trace_document(run_bundled(name)), TraceFormat::kJson));
    EXPECT_EQ(actual, expected) << name;
  }
}

TEST(Cli, ProjectCompleted) {
  CliRun r = cli({"project", "--domain", scenario_file("robot1d.domain"), "--program", scenario_file("robot1d.prog")});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.rfind("0.000000\tstartGo(50)\n", 0), 0u) << r.out;
}

TEST(Cli, OutWritesAFile) {
  TempDir dir;
  std::string path = dir.file("trace.json");
  CliRun r = cli({"project", "--domain", scenario_file("robot1d.domain"), "--program", scenario_file("robot1d.prog"),
               "--format", "json", "--out", path});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.out.empty());
  EXPECT_EQ(json::parse(slurp(path))["entries"].size(), 3u);
}

TEST(Cli, CheckBlocked) {
  CliRun r = cli({"check", "--domain", scenario_file("robot1d.domain"), "--program", scenario_file("blocked.prog")});
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(r.out.rfind("blocked at 0.000000: waitFor condition has no least time point", 0), 0u) << r.out;
}

TEST(Cli, CheckCompleted) {
  CliRun r = cli({"check", "--domain", scenario_file("robot1d.domain"), "--program", scenario_file("robot1d.prog")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "executable (3 actions, ends at 20.000000)\n");
}

TEST(Cli, InvalidInputsExitThree) {
  TempDir dir;
  std::string domain = scenario_file("robot1d.domain");
  CliRun syntax = cli({"project", "--domain", domain, "--program", dir.write("bad.prog", "(seq (startGo 50)")});
  EXPECT_EQ(syntax.code, 3);
  EXPECT_NE(syntax.err.find("end of input"), std::string::npos) << syntax.err;
  CliRun undeclared = cli({"project", "--domain", domain, "--program", dir.write("undeclared.prog", "(fly 3)")});
  EXPECT_EQ(undeclared.code, 3);
  CliRun recursive = cli({"project", "--domain", dir.write("rec.domain", "(proc p () p)"), "--program",
                       dir.write("nil.prog", "nil")});
  EXPECT_EQ(recursive.code, 3);
  EXPECT_NE(recursive.err.find("p -> p"), std::string::npos) << recursive.err;
}

TEST(Cli, StepLimitExitsFour) {
  TempDir dir;
  std::string prog = dir.write("loop.prog", "(while true (say hi))");
  CliRun r = cli({"project", "--domain", scenario_file("robot1d.domain"), "--program", prog, "--max-steps", "50"});
  EXPECT_EQ(r.code, 4);
  EXPECT_NE(r.out.find("# status step-limit"), std::string::npos);
  EXPECT_NE(r.out.find("# steps 50"), std::string::npos);
}

TEST(Cli, UsageErrorsExitOne) {
  EXPECT_EQ(cli({}).code, 1);
  EXPECT_EQ(cli({"project", "--domain", scenario_file("robot1d.domain")}).code, 1);
  EXPECT_EQ(cli({"project", "--domain", "/nonexistent/x.domain", "--program", scenario_file("robot1d.prog")}).code, 1);
  EXPECT_EQ(cli({"project", "--domain", scenario_file("robot1d.domain"), "--program", scenario_file("robot1d.prog"),
                 "--format", "xml"})
                .code,
            1);
  EXPECT_EQ(cli({"bench", "--scenario", "nope"}).code, 1);
  EXPECT_EQ(cli({"--help"}).code, 0);
}

TEST(Cli, Bench) {
  CliRun r = cli({"bench", "--scenario", "robot1d", "--repeat", "3"});
  EXPECT_EQ(r.code, 0) << r.err;
  std::istringstream lines(r.out);
  std::string header, row;
  std::getline(lines, header);
  std::getline(lines, row);
  EXPECT_EQ(header, "scenario\tstatus\tactions\ttransitions\truns\tmin_ms\tmean_ms");
  EXPECT_EQ(row.rfind("robot1d\tcompleted\t3\t3\t3\t", 0), 0u) << row;
}

TEST(Cli, BinaryExitCodes) {
  std::string base = std::string(CCGOLOG_CLI) + " check --domain " + scenario_file("robot1d.domain") + " --program ";
  int ok = std::system((base + scenario_file("robot1d.prog") + " > /dev/null").c_str());
  int blocked = std::system((base + scenario_file("blocked.prog") + " > /dev/null").c_str());
  ASSERT_TRUE(WIFEXITED(ok) && WIFEXITED(blocked));
  EXPECT_EQ(WEXITSTATUS(ok), 0);
  EXPECT_EQ(WEXITSTATUS(blocked), 2);
}

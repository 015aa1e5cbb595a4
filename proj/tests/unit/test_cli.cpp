// Runs the frenetbv executable and checks exit codes and output stability.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

#include <gtest/gtest.h>

namespace fs = std::filesystem;

namespace {

const std::string kCli = FRENETBV_CLI_PATH;
const std::string kData = FRENETBV_TEST_DATA;

struct CliRun {
  int code;
  std::string out;
};

CliRun run(const std::string& args) {
  const std::string cmd = kCli + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  char buf[4096];
  while (std::fgets(buf, sizeof buf, pipe)) out += buf;
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

fs::path scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("frenetbv_cli_test_" + name);
  fs::remove_all(p);
  return p;
}

}  // namespace

TEST(Cli, HelpAndList) {
  EXPECT_EQ(run("--help").code, 0);
  const CliRun list = run("list");
  EXPECT_EQ(list.code, 0);
  EXPECT_NE(list.out.find("case-study"), std::string::npos);
  EXPECT_NE(list.out.find("geometric-jumps"), std::string::npos);
}

TEST(Cli, ParseErrorsExitTwo) {
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
  EXPECT_EQ(run("solve").code, 2);
  EXPECT_EQ(run("solve --builtin helix --format xml").code, 2);
  EXPECT_EQ(run("solve --builtin helix --eps 0.1,0.2").code, 2);
  EXPECT_EQ(run("solve --builtin nope").code, 2);
  const CliRun field = run("solve --scenario " + kData + "/bad_field.yaml");
  EXPECT_EQ(field.code, 2);
  EXPECT_NE(field.out.find("line 7"), std::string::npos);
  EXPECT_NE(field.out.find("jumps[0].torsion"), std::string::npos);
  EXPECT_EQ(run("validate --scenario " + kData + "/bad_syntax.yaml").code, 2);
}

TEST(Cli, InvalidJumpsExitThree) {
  const fs::path out = scratch("bad");
  EXPECT_EQ(run("solve --scenario " + kData + "/bad_jump.yaml --out " + out.string()).code, 3);
  EXPECT_EQ(run("validate --scenario " + kData + "/bad_jump.yaml --out " + out.string()).code, 3);
  EXPECT_EQ(run("solve --builtin case-study --d 3 --tau 1 --out " + out.string()).code, 3);
  EXPECT_EQ(run("oracle 1.5 --builtin case-study --out " + out.string()).code, 3);
  
}

TEST(Cli, SolveIsByteForByteDeterministic) {
  const fs::path a = scratch("det_a"), b = scratch("det_b");
  ASSERT_EQ(run("solve --builtin three-jumps --grid 512 --out " + a.string()).code, 0);
  ASSERT_EQ(run("solve --builtin three-jumps --grid 512 --out " + b.string()).code, 0);
  for (const char* f : {"frames.csv", "curve.csv", "curve.obj", "summary.json"}) {
    ASSERT_TRUE(fs::exists(a / f)) << f;
    EXPECT_EQ(slurp(a / f), slurp(b / f)) << f;
  }
  EXPECT_FALSE(fs::exists(a / "frames.csv.tmp"));
}

TEST(Cli, FormatFilterAndExport) {
  const fs::path a = scratch("fmt");
  ASSERT_EQ(run("solve --scenario " + kData + "/case_study.yaml --format json --out " + a.string()).code, 0);
  EXPECT_TRUE(fs::exists(a / "summary.json"));
  EXPECT_FALSE(fs::exists(a / "frames.csv"));
  ASSERT_EQ(run("solve --scenario " + kData + "/case_study.yaml --format csv --out " + a.string()).code, 0);
  const fs::path e = scratch("export");
  ASSERT_EQ(run("export --from " + a.string() + " --out " + e.string()).code, 0);
  const std::string obj = slurp(e / "curve.obj");
  EXPECT_EQ(obj.rfind("o ", 0), 0u);
  EXPECT_EQ(run("export --from " + (a / "nowhere").string()).code, 2);
}

TEST(Cli, OracleValidateConvergence) {
  const fs::path a = scratch("misc");
  EXPECT_EQ(run("oracle 0.1 --builtin case-study --grid 512 --out " + a.string()).code, 0);
  EXPECT_TRUE(fs::exists(a / "oracle.json"));
  const CliRun v = run("validate --builtin random-jumps --seed 9 --grid 512 --out " + a.string());
  EXPECT_EQ(v.code, 0);
  EXPECT_NE(v.out.find("0 violation(s)"), std::string::npos);
  const CliRun c = run("convergence --builtin case-study --grid 512 --eps 0.2,0.1 --out " + a.string());
  EXPECT_EQ(c.code, 0);
  EXPECT_TRUE(fs::exists(a / "convergence.csv"));
}

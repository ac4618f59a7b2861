#include <gtest/gtest.h>

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <string>

#include <nlohmann/json.hpp>

namespace {

struct Result {
  int code;
  std::string out;
};

Result run(const std::string& args) {
  const std::string cmd = std::string(POIREV_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return {-1, ""};
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

const std::string fixtures = POIREV_FIXTURE_DIR;

}  // namespace

TEST(Cli, EnumeratePrintsCountFirst) {
  Result r = run("enumerate tpo 4");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(first_line(r.out), "75");
  r = run("enumerate poi 2 --list");
  EXPECT_EQ(first_line(r.out), "7");
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 8);
  r = run("enumerate poi 3 --format json");
  EXPECT_EQ(nlohmann::json::parse(r.out)["count"], 85);
}

TEST(Cli, ReviseTpoMultiStep) {
  const Result r = run("revise --atoms A,C --tpo '10 | 00 | 01 | 11' --op restrained C 'A | C' --format json");
  ASSERT_EQ(r.code, 0) << r.out;
  const auto j = nlohmann::json::parse(r.out);
  ASSERT_EQ(j["steps"].size(), 2u);
  EXPECT_EQ(j["steps"][0]["posterior"]["levels"],
            nlohmann::json::parse(R"([["01"], ["10"], ["00"], ["11"]])"));
}

TEST(Cli, RevisePoi) {
  Result r = run("revise --poi 'x:+0,-1 y:+1,-3 z:+2,-4' --op poi-circ 'y | z'");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("posterior: x y | z"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("success: no"), std::string::npos) << r.out;
  r = run("revise --poi 'x:+0,-1 y:+1,-3 z:+2,-4' --op poi 'y | z' x");
  EXPECT_EQ(r.code, 2);
}

TEST(Cli, FixtureOperatorFromFile) {
  Result r = run("revise --op fixture:" + fixtures + "/p5b.json C");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("posterior: 11 | 01 | 00 | 10"), std::string::npos) << r.out;
  r = run("revise --op fixture:" + fixtures + "/p5b.json A");
  EXPECT_EQ(r.code, 2);
  r = run("check --op fixture:" + fixtures + "/p5a.json c1 c2 p");
  EXPECT_EQ(r.code, 0) << r.out;
  r = run("check --op fixture:" + fixtures + "/p5a.json gamma1");
  EXPECT_EQ(r.code, 1) << r.out;
}

TEST(Cli, CheckExitCodes) {
  EXPECT_EQ(run("check --family lex --n 3 rec sep pplus").code, 0);
  Result r = run("check --family natural --n 3 p --format json");
  EXPECT_EQ(r.code, 1);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["entries"][0]["verdict"], "witness");
  EXPECT_EQ(run("check --tpo 'x | y z' --op natural p").code, 1);
  EXPECT_EQ(run("check --tpo 'x | y z' --op lex all").code, 0);
}

TEST(Cli, SearchExitCodes) {
  EXPECT_EQ(run("search p --family natural --n 3").code, 1);
  EXPECT_EQ(run("search rec --family lex --n 2").code, 0);
  EXPECT_EQ(run("search p --family natural --n 3 --budget 2").code, 3);
}

TEST(Cli, Overrules) {
  const Result r = run("overrules --tpo 'x | y | z' --op lex x y --format json");
  EXPECT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["overrules"], true);
  EXPECT_EQ(j["strictly_overrules"], true);
}

TEST(Cli, FixturesCommand) {
  Result r = run("fixtures");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("PASS FX-NF"), std::string::npos);
  r = run("fixtures FX-FIG --format json");
  EXPECT_EQ(nlohmann::json::parse(r.out)["all_pass"], true);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
  EXPECT_EQ(run("enumerate tpo").code, 2);
  EXPECT_EQ(run("enumerate tpo 9").code, 2);
  EXPECT_EQ(run("check --tpo 'x | y' --op lex nosuchid").code, 2);
  EXPECT_EQ(run("revise --mode propositional --tpo '1 | 0' --op lex A").code, 2);
  EXPECT_EQ(run("revise --tpo 'x | y' --op lex q").code, 2);
  EXPECT_EQ(run("revise --tpo 'x | y' --op lex 'x & y'").code, 2);
  EXPECT_EQ(run("revise --tpo 'x | y' --op nope x").code, 2);
  EXPECT_EQ(run("revise --poi 'x:+1,-0' --op poi x").code, 2);
  EXPECT_EQ(run("--help").code, 0);
}

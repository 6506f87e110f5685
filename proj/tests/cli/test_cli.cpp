#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace {

const std::string kCli = LOGTORSOR_CLI;
const std::string kData = LOGTORSOR_DATA_DIR;

struct Run {
  int exit_code = -1;
  std::string out;
  std::string err;
};

Run run(const std::string& args) {
  const auto err_path = std::filesystem::temp_directory_path() /
                        ("logtorsor-cli-" + std::to_string(::getpid()) + ".err");
  const std::string cmd = "cd '" + kData + "' && '" + kCli + "' " + args + " 2>'" +
                          err_path.string() + "'";
  Run r;
  FILE* pipe = ::popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t n;
  while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int status = ::pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream in(err_path);
  std::ostringstream ss;
  ss << in.rdbuf();
  r.err = ss.str();
  std::filesystem::remove(err_path);
  return r;
}

nlohmann::json parse(const std::string& s) { return nlohmann::json::parse(s); }

}  // namespace

TEST(Cli, CompgroupOnTheExampleFibers) {
  auto r = run("compgroup fiber-B.json");
  EXPECT_EQ(r.exit_code, 0) << r.err;
  EXPECT_EQ(r.out, "{\"invariant_factors\":[3]}\n");
  r = run("compgroup fiber-A.json");
  EXPECT_EQ(r.out, "{\"invariant_factors\":[2,2]}\n");
}

TEST(Cli, VerdictAndExtend) {
  auto r = run("verdict divisor-l.json");
  EXPECT_EQ(r.exit_code, 0) << r.err;
  EXPECT_EQ(r.out, "{\"gamma\":[\"2/3\",\"1/3\",\"0\"],\"kind\":\"LogOnly\"}\n");
  r = run("extend divisor-l-minus.json");
  EXPECT_EQ(parse(r.out)["q"], (nlohmann::json{"1/3", "2/3", "0"}));
  r = run("verdict divisor-p.json");
  EXPECT_EQ(parse(r.out)["kind"], "FppfExtension");
}

TEST(Cli, Pairing) {
  auto r = run("pairing divisor-l.json divisor-l.json");
  EXPECT_EQ(r.exit_code, 0) << r.err;
  EXPECT_EQ(parse(r.out)["pairing"], "2/3");
  r = run("pairing divisor-l.json divisor-p.json");
  EXPECT_EQ(r.exit_code, 2);
}

TEST(Cli, Chiodo) {
  auto r = run("chiodo graph-polygon6.json --r 3");
  EXPECT_EQ(r.exit_code, 0) << r.err;
  const auto j = parse(r.out);
  EXPECT_EQ(j["holds"], true);
  EXPECT_EQ(j["c2"], 6);
  EXPECT_EQ(j["predicted"]["invariant_factors"], (nlohmann::json{3}));
  r = run("chiodo graph-theta.json --r 3");
  EXPECT_EQ(parse(r.out)["holds"], false);
  r = run("chiodo graph-polygon6.json --r 3 --cap 0");
  EXPECT_EQ(r.exit_code, 0);
}

TEST(Cli, ChartCommands) {
  auto r = run("singular chart-p5c2.json");
  EXPECT_EQ(r.exit_code, 0) << r.err;
  EXPECT_EQ(parse(r.out)["points"], (nlohmann::json{{1, 0}, {4, 0}}));
  r = run("regular chart-l5.json --point 0,0");
  EXPECT_EQ(parse(r.out)["tangent_dimension"], 3);
  r = run("regular chart-p5c2.json --point 4,0");
  EXPECT_EQ(parse(r.out)["regular"], true);
  r = run("blowup chart-l5.json --center 0,0");
  EXPECT_EQ(r.exit_code, 0) << r.err;
  const auto charts = parse(r.out)["charts"];
  ASSERT_EQ(charts.size(), 3u);
  EXPECT_EQ(charts[0]["equations"][1], "x*w - 5");
  r = run("singular chart-p5c2.json --cap 10");
  EXPECT_EQ(r.exit_code, 3);
  EXPECT_EQ(parse(r.err)["error"], "CapExceeded");
}

TEST(Cli, Reproduce) {
  auto r = run("reproduce l-example");
  EXPECT_EQ(r.exit_code, 0) << r.err;
  const auto j = parse(r.out);
  EXPECT_EQ(j["component_group"]["invariant_factors"], (nlohmann::json{3}));
  EXPECT_EQ(j["verdicts"][0]["kind"], "LogOnly");
  r = run("reproduce l-example --l 7 --format text");
  EXPECT_NE(r.out.find("Phi = Z/3"), std::string::npos);
  r = run("reproduce p-example --p 7 --c 3");
  EXPECT_EQ(parse(r.out)["summary"]["fail"], 0);
  r = run("reproduce nope");
  EXPECT_EQ(r.exit_code, 2);
  EXPECT_EQ(parse(r.err)["error"], "UnknownExample");
}

TEST(Cli, ValidationErrors) {
  auto r = run("compgroup malformed.json");
  EXPECT_EQ(r.exit_code, 2);
  EXPECT_TRUE(r.out.empty());
  const auto e = parse(r.err);
  EXPECT_EQ(e["error"], "InvalidFiber");
  EXPECT_TRUE(e["message"].is_string());
  EXPECT_EQ(run("compgroup missing.json").exit_code, 2);
  EXPECT_EQ(run("regular chart-l5.json --point 1,1").exit_code, 2);
  EXPECT_EQ(run("regular chart-l5.json --point 1,x").exit_code, 2);
  EXPECT_EQ(run("chiodo graph-theta.json").exit_code, 2);
  EXPECT_EQ(run("").exit_code, 2);
}

TEST(Cli, InlineDocuments) {
  const auto r = run(
      "compgroup '{\"components\":[\"a\",\"b\"],\"multiplicities\":[1,1],"
      "\"matrix\":[[-5,5],[5,-5]]}'");
  EXPECT_EQ(r.exit_code, 0) << r.err;
  EXPECT_EQ(r.out, "{\"invariant_factors\":[5]}\n");
}

TEST(Cli, DeterministicOutput) {
  for (const char* args : {"reproduce p-example", "singular chart-p5c2.json",
                           "blowup chart-p5c2.json --center 1,0", "chiodo graph-theta.json --r 2"}) {
    const auto a = run(args), b = run(args);
    EXPECT_EQ(a.out, b.out) << args;
    EXPECT_FALSE(a.out.empty()) << args;
  }
}

#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <sstream>

#include "refloor/cli.hpp"

using namespace refloor;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "refloor");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, CheckAgrees) {
  const auto r = run({"check", "--k", "6", "--class", "2;0,0,0,0,0,0", "--genus", "0", "--mu1", "", "--mu2", "1,1,2"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("enumerate: 3[2]_q"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("recurse:   3[2]_q"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("agree"), std::string::npos);
}

TEST(Cli, RecurseQuartic) {
  const auto r = run({"recurse", "--k", "6", "--class", "4;1,1,1,1,1,1", "--genus", "0", "--mu2", "1,1"});
  EXPECT_EQ(r.code, 0) << r.err;
  const std::string first = r.out.substr(0, r.out.find('\n'));
  EXPECT_EQ(parse_half_laurent(first), parse_half_laurent("[2]_q^4+[4]_q^2+10[3]_q^2+67[2]_q^2+226"));
}

TEST(Cli, CountEmptyGenerator) {
  const auto r = run({"count", "--k", "6", "--class", "1;0,0,0,0,0,0", "--genus", "1", "--mu2", "1,1"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("total: 0"), std::string::npos) << r.out;
}

TEST(Cli, CountJson) {
  const auto r = run({"count", "--class", "2;0,0,0,0,0,0", "--mu2", "4", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = Json::parse(r.out);
  EXPECT_EQ(half_laurent_from_json(j["total_refined"]), quantum_integer(4));
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"count", "--class", "2;0,0,0,0,0,0", "--mu2", "1,1"}).code, 3);
  EXPECT_EQ(run({"count", "--k", "5", "--class", "2;0,0,0,0,0,0", "--mu2", "1,1,2"}).code, 2);
  EXPECT_EQ(run({"count", "--class", "2;0,x", "--mu2", "1"}).code, 2);
  EXPECT_EQ(run({"count", "--class", "1;", "--mu2", "1,,1"}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"recurse", "--class", "1;", "--mu2", "1,1", "--genus", "-1"}).code, 2);
  EXPECT_EQ(run({"bps", "--class", "1;0,0,0,0,0,0", "--mu2", "1,1", "--kind", "delpezzo"}).code, 3);
}

TEST(Cli, Bps) {
  auto r = run({"bps", "--k", "6", "--class", "2;0,0,0,0,0,0", "--mu2", "4", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "{\"polynomial\":{\"halves\":[[0,\"4\"]]},\"bps\":{\"g0\":\"4\"}}\n");
  r = run({"bps", "--kind", "cubic", "--class", "3;0,0,0,0,0,0"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("n_g0 = 12"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("n_g1 = -1"), std::string::npos) << r.out;
  r = run({"bps", "--kind", "delpezzo", "--class", "1;0,0,0,0,0"});
  EXPECT_EQ(r.code, 0) << r.err;
}

TEST(Cli, TableAgrees) {
  const auto r = run({"table", "--k", "2", "--max-degree", "2", "--max-genus", "1", "--method", "both", "--jobs", "2"});
  EXPECT_EQ(r.code, 0) << r.err;
  std::istringstream lines(r.out);
  int n = 0;
  for (std::string line; std::getline(lines, line); ++n) EXPECT_TRUE(Json::parse(line)["agree"].get<bool>()) << line;
  EXPECT_GT(n, 20);
}

TEST(Cli, CacheLifecycle) {
  const auto path = (std::filesystem::temp_directory_path() / "refloor-cli-cache.jsonl").string();
  std::filesystem::remove(path);
  EXPECT_EQ(run({"recurse", "--class", "2;1,0", "--mu2", "1,2", "--cache", path}).code, 0);
  auto r = run({"cache", "inspect", "--cache", path, "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_GT(Json::parse(r.out)["entries"].get<int>(), 0);
  r = run({"cache", "verify", "--cache", path});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_EQ(run({"cache", "clear", "--cache", path, "--read-only"}).code, 2);
  EXPECT_EQ(run({"cache", "clear", "--cache", path}).code, 0);
  EXPECT_EQ(std::filesystem::file_size(path), 0u);
  std::filesystem::remove(path);
}

TEST(Cli, BinaryExitCode) {
  const std::string cmd = std::string(REFLOOR_CLI_PATH) + " count --class \"2;0,0,0,0,0,0\" --mu2 1,1 >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  ASSERT_NE(status, -1);
  EXPECT_EQ(WEXITSTATUS(status), 3);
}

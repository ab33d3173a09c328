#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

namespace {

const std::string kK2 = R"({"signature":[{"name":"E","arity":2}],"domain":2,"relations":{"E":[[0,1],[1,0]]}})";
const std::string kK3 = R"({"signature":[{"name":"E","arity":2}],"domain":3,"relations":{"E":[[0,1],[0,2],[1,0],[1,2],[2,0],[2,1]]}})";
const std::string kD2 = R"({"signature":[{"name":"E","arity":2}],"domain":2,"relations":{"E":[[0,1]]}})";

std::string quote(const std::string &s) { return "'" + s + "'"; }

struct Run {
  int status;
  std::string out;
};

Run run(const std::string &args) {
  static int counter = 0;
  auto path = std::filesystem::temp_directory_path() / ("qcsp_cli_" + std::to_string(::getpid()) + "_" +
                                                        std::to_string(counter++) + ".out");
  std::string cmd = std::string(QCSP_CLI_PATH) + " " + args + " > " + path.string() + " 2>/dev/null";
  int raw = std::system(cmd.c_str());
  std::ifstream in(path);
  std::string out((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  std::filesystem::remove(path);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

}  // namespace

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run("hom find " + quote(kK3) + " " + quote(kK3)).status, 0);
  EXPECT_EQ(run("hom find " + quote(kK3) + " " + quote(kK2)).status, 1);
  EXPECT_EQ(run("hom find " + quote(kK3)).status, 2);
  EXPECT_EQ(run("hom find " + quote("{\"domain\":") + " " + quote(kK2)).status, 2);
  EXPECT_EQ(run("power --mode alice " + quote(kK3) + " --k 40").status, 3);
  EXPECT_EQ(run("power --mode carol " + quote(kK3) + " --k 2").status, 2);
  EXPECT_EQ(run("quantum certificate-audit --d 3 --trials 20").status, 0);
  EXPECT_EQ(run("no-such-command").status, 2);
}

TEST(Cli, BruteForceRoundTrip) {
  auto found = run("game brute " + quote(kK2) + " " + quote(kD2) + " --k 2 --direction alice");
  ASSERT_EQ(found.status, 0);
  EXPECT_NE(found.out.find("\"variant\""), std::string::npos);
  std::string strategy = found.out.substr(0, found.out.find_last_not_of("\n") + 1);
  EXPECT_EQ(run("game verify " + quote(kK2) + " " + quote(kD2) + " " + quote(strategy)).status, 0);
  EXPECT_EQ(run("game brute " + quote(kK2) + " " + quote(kD2) + " --k 2 --direction bob").status, 1);
}

TEST(Cli, Demos) {
  auto list = run("demo --list");
  ASSERT_EQ(list.status, 0);
  EXPECT_NE(list.out.find("clique-powers"), std::string::npos);
  EXPECT_EQ(run("demo clique-powers").status, 0);
  EXPECT_EQ(run("demo not-a-demo").status, 2);
}

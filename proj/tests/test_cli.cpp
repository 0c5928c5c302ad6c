#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace {

struct Result {
  int status;
  std::string out;
};

const std::string kCli = FANOBOTT_CLI;
const std::string kGolden = FANOBOTT_GOLDEN_DIR;

std::string in(const std::string& name) { return kGolden + "/inputs/" + name; }

Result run(const std::string& args) {
  const std::string cmd = kCli + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  const int raw = pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

void expect_golden(const std::string& args, const std::string& golden, int status = 0) {
  const Result r = run(args);
  EXPECT_EQ(r.status, status) << args;
  EXPECT_EQ(r.out, slurp(kGolden + "/" + golden)) << args;
  EXPECT_EQ(run(args).out, r.out) << "not byte-stable: " << args;
}

}  // namespace

TEST(Cli, EnumerateCount) {
  const Result r = run("enumerate -d 4 --count");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "105\n");
}

TEST(Cli, EnumerateStream) {
  const Result r = run("enumerate -d 2");
  EXPECT_EQ(r.out,
            "{\"dim\":2,\"entries\":[[0,0],[0,0]]}\n"
            "{\"dim\":2,\"entries\":[[0,1],[0,0]]}\n"
            "{\"dim\":2,\"entries\":[[0,-1],[0,0]]}\n");
}

TEST(Cli, ValidateExitCodes) {
  EXPECT_EQ(run("validate " + in("zero3.json")).status, 0);
  EXPECT_EQ(run("validate " + in("six.json")).status, 0);
  const Result bad = run("validate " + in("bad_row.json"));
  EXPECT_EQ(bad.status, 1);
  const auto j = nlohmann::json::parse(bad.out);
  EXPECT_FALSE(j.at("valid").get<bool>());
  EXPECT_EQ(j.at("error").at("row"), 1);
  EXPECT_EQ(run("validate " + in("truncated.json")).status, 2);
  EXPECT_EQ(run("validate " + in("missing.json")).status, 2);
  EXPECT_EQ(run("validate --inline '[[0]]'").status, 0);
  EXPECT_EQ(run("validate --inline '[[0,2],[0,0]]'").status, 1);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run("").status, 2);
  EXPECT_EQ(run("frobnicate").status, 2);
  EXPECT_EQ(run("canon " + in("six.json")).status, 2);
  EXPECT_EQ(run("canon --mode signed " + in("six.json")).status, 2);
  EXPECT_EQ(run("equiv --mode diffeo " + in("six.json")).status, 2);
  EXPECT_EQ(run("sve " + in("bad_row.json")).status, 2);
  EXPECT_EQ(run("witness " + in("six.json") + " " + in("seven_m.json")).status, 2);
  EXPECT_EQ(run("oracle -d 6").status, 2);
}

TEST(Cli, EquivSevenVertexPair) {
  const std::string pair = in("seven_m.json") + " " + in("seven_m1.json");
  const Result diffeo = run("equiv --mode diffeo " + pair);
  EXPECT_EQ(diffeo.status, 0);
  EXPECT_EQ(diffeo.out, "true\n");
  const Result variety = run("equiv --mode variety " + pair);
  EXPECT_EQ(variety.status, 1);
  EXPECT_EQ(variety.out, "false\n");
}

TEST(Cli, StdinInput) {
  const Result r = run("peel - < " + in("tree5.json"));
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "[2,2,1]\n");
}

TEST(Cli, WitnessThenCertify) {
  const std::string pair = in("seven_m.json") + " " + in("seven_m1.json");
  const Result w = run("witness " + pair);
  ASSERT_EQ(w.status, 0);
  const std::string path = testing::TempDir() + "fanobott_witness.json";
  std::ofstream(path) << w.out;
  const Result c = run("certify " + pair + " " + path);
  EXPECT_EQ(c.status, 0);
  EXPECT_TRUE(nlohmann::json::parse(c.out).at("certified").get<bool>());

  std::ofstream(path) << R"({"steps": []})";
  const Result bad = run("certify " + pair + " " + path);
  EXPECT_EQ(bad.status, 1);
  EXPECT_FALSE(nlohmann::json::parse(bad.out).at("certified").get<bool>());

  const Result none = run("witness --mode variety " + pair);
  EXPECT_EQ(none.status, 1);
}

TEST(Cli, ClassifyMatchesOracle) {
  for (int d = 1; d <= 4; ++d) {
    const auto classes = nlohmann::json::parse(run("classify --mode diffeo -d " + std::to_string(d)).out);
    const Result o = run("oracle -d " + std::to_string(d));
    EXPECT_EQ(o.status, 0);
    const auto oracle = nlohmann::json::parse(o.out);
    EXPECT_EQ(classes.at("class_count"), oracle.at("diffeo").at("bfs_classes"));
    EXPECT_TRUE(oracle.at("diffeo").at("agree").get<bool>());
  }
  const auto two = nlohmann::json::parse(run("classify --mode diffeo -d 2").out);
  EXPECT_EQ(two.at("class_count"), 2);
}

TEST(Cli, ClassifyIsJobCountIndependent) {
  EXPECT_EQ(run("classify --mode variety -d 4 --jobs 1").out,
            run("classify --mode variety -d 4 --jobs 4").out);
}

TEST(Cli, Goldens) {
  expect_golden("forest-dot " + in("tree5.json"), "tree5.dot");
  expect_golden("validate " + in("six.json"), "validate_six.json");
  expect_golden("sve " + in("six.json"), "sve_six.json");
  expect_golden("canon --mode diffeo " + in("seven_m.json"), "canon_seven_diffeo.txt");
  expect_golden("canon --mode variety " + in("seven_m.json"), "canon_seven_variety.txt");
  expect_golden("witness " + in("seven_m.json") + " " + in("seven_m1.json"), "witness_seven.json");
  expect_golden("classify --mode diffeo -d 3", "classify_d3_diffeo.json");
  expect_golden("oracle -d 3", "oracle_d3.json");
}

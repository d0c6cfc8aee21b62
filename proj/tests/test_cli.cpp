#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "avdc/generators.hpp"
#include "avdc/graph_io.hpp"
#include "cli.hpp"
#include "support/oracles.hpp"

namespace fs = std::filesystem;
using namespace avdc;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("avdc_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    fs::path p = dir_ / name;
    std::ofstream(p, std::ios::binary) << text;
    return p.string();
  }
  static std::string read(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    return std::string(std::istreambuf_iterator<char>(f), {});
  }

  fs::path dir_;
};

}  // namespace

TEST_F(CliTest, ColorPetersen) {
  std::string g = write("petersen.g6", emit_graph(petersen_graph(), GraphFormat::Graph6));
  Result r = run({"color", g});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_LE(j["colors_used"].get<int>(), 5);
  EXPECT_EQ(r.err, "colors=" + std::to_string(j["colors_used"].get<int>()) + " bound=12\n");

  std::string cert = (dir_ / "cert.json").string();
  r = run({"color", g, "--out", cert});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("colors=", 0), 0u);
  EXPECT_NE(r.out.find("bound=12"), std::string::npos);
}

TEST_F(CliTest, ColorReadsStdin) {
  Result r = run({"color"}, emit_graph(complete_graph(7), GraphFormat::Dimacs));
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.err.find("bound=20"), std::string::npos);
}

TEST_F(CliTest, ColorRegular) {
  std::string g = write("r6.g6", emit_graph(random_regular_graph(16, 6, 3), GraphFormat::Graph6));
  Result r = run({"color-regular", g});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.err.find("bound=22"), std::string::npos);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_LE(j["colors_used"].get<int>(), 17);
}

TEST_F(CliTest, OracleOnC5) {
  Result r = run({"oracle"}, "0 1\n1 2\n2 3\n3 4\n0 4\n");
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "5\n");
  r = run({"oracle", "--oracle-edge-cap", "3"}, "0 1\n1 2\n2 3\n3 4\n0 4\n");
  EXPECT_EQ(r.code, 2);
}

TEST_F(CliTest, PartitionK7) {
  std::string g = write("k7.g6", "F~~~w\n");
  Result r = run({"partition", g});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = nlohmann::json::parse(r.out);
  ASSERT_TRUE(j.contains("p1"));
  EXPECT_EQ(j["p1"]["parts"].size(), 2u);
  EXPECT_TRUE(j["p1"]["pass"].get<bool>());
  EXPECT_TRUE(j["p2"]["pass"].get<bool>());
  std::istringstream lines(r.err);
  std::string p1;
  std::getline(lines, p1);
  EXPECT_EQ(p1.rfind("p1: parts=2 max_degrees=", 0), 0u) << p1;
  EXPECT_NE(p1.find("checks=pass"), std::string::npos);
  // max degrees listed as "a,b" with a <= 3 and b <= 4
  auto md = p1.substr(p1.find("max_degrees=") + 12);
  EXPECT_LE(md[0] - '0', 3);
  EXPECT_LE(md[2] - '0', 4);
}

TEST_F(CliTest, PartitionTraceWritesJsonLines) {
  std::string g = write("g.g6", emit_graph(random_regular_graph(30, 9, 1), GraphFormat::Graph6));
  std::string trace = (dir_ / "trace.jsonl").string();
  Result r = run({"partition", g, "--trace", trace});
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream lines(read(trace));
  for (std::string line; std::getline(lines, line);) EXPECT_NO_THROW(nlohmann::json::parse(line));
}

TEST_F(CliTest, PartitionRegular) {
  std::string g = write("r7.g6", emit_graph(random_regular_graph(16, 7, 2), GraphFormat::Graph6));
  Result r = run({"partition-regular", g});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["regular"]["parts"].size(), 2u);
  EXPECT_EQ(run({"partition-regular"}, "Dhc\n").code, 2);
}

TEST_F(CliTest, GenFamilies) {
  EXPECT_EQ(run({"gen", "cycle", "5"}).out, "Dhc\n");
  EXPECT_EQ(run({"gen", "petersen"}).out, "IheA@GUAo\n");
  EXPECT_EQ(run({"gen", "complete", "4", "--format", "dimacs"}).out.rfind("p edge 4 6", 0), 0u);
  Result a = run({"gen", "regular", "20", "5", "--seed", "7"});
  Result b = run({"gen", "regular", "20", "5", "--seed", "7"});
  EXPECT_EQ(a.out, b.out);
  Graph g = parse_graph(a.out, GraphFormat::Graph6);
  EXPECT_TRUE(g.is_regular());
  EXPECT_EQ(g.max_degree(), 5);
  EXPECT_EQ(run({"gen", "gnp", "10", "x"}).code, 2);
  EXPECT_EQ(run({"gen", "cycle"}).code, 2);
  EXPECT_EQ(run({"gen", "wheel", "5"}).code, 2);
}

TEST_F(CliTest, VerifyRoundTripAndTamper) {
  Graph g = random_regular_graph(14, 5, 4);
  std::string gp = write("g.g6", emit_graph(g, GraphFormat::Graph6));
  std::string cert = (dir_ / "cert.json").string();
  ASSERT_EQ(run({"color", gp, "--out", cert}).code, 0);
  Result r = run({"verify", gp, cert});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("verify PASS"), std::string::npos);

  auto j = nlohmann::json::parse(read(cert));
  // Make the first two edges at vertex 0 share a colour.
  int first = -1;
  for (std::size_t i = 0; i < j["edges"].size(); ++i)
    if (j["edges"][i][0] == 0) {
      if (first < 0) first = static_cast<int>(i);
      else {
        j["edges"][i][2] = j["edges"][first][2];
        break;
      }
    }
  std::string bad = write("bad.json", j.dump());
  r = run({"verify", gp, bad});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("verify FAIL"), std::string::npos);
}

TEST_F(CliTest, AuditSingleAndDirectory) {
  Result r = run({"audit", "--json"}, "IheA@GUAo\n");
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_TRUE(nlohmann::json::parse(r.out)["pass"].get<bool>());

  fs::create_directories(dir_ / "corpus");
  write("corpus/a.g6", "Dhc\n");
  write("corpus/b.g6", "F~~~w\n");
  write("corpus/c.txt", "0 1\n1 2\n");
  const std::string corpus = (dir_ / "corpus").string();
  Result one = run({"audit", corpus, "--jobs", "1"});
  Result four = run({"audit", corpus, "--jobs", "4"});
  EXPECT_EQ(one.code, 0) << one.out;
  EXPECT_EQ(one.out, four.out);
  EXPECT_NE(one.out.find("audit 3 files PASS"), std::string::npos);

  write("corpus/d.g6", "Ah\n");  // K2: not normal
  EXPECT_EQ(run({"audit", corpus}).code, 1);
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"color", "--format", "gml"}, "Dhc\n").code, 2);
  EXPECT_EQ(run({"color", (dir_ / "missing.g6").string()}).code, 2);
  EXPECT_EQ(run({"color"}, "not a graph\n").code, 2);
  EXPECT_EQ(run({"color"}, "Ah\n").code, 2);  // K2 is not normal
}

TEST_F(CliTest, OutputIsDeterministic) {
  Graph host = oracle::strip_to_normal(gnp_graph(40, 0.3, 5));
  std::string g = write("g.g6", emit_graph(host, GraphFormat::Graph6));
  for (const char* cmd : {"color", "partition", "audit"}) {
    Result a = run({cmd, g, "--seed", "3"});
    Result b = run({cmd, g, "--seed", "3"});
    EXPECT_EQ(a.code, 0) << cmd << a.err;
    EXPECT_EQ(a.out, b.out) << cmd;
    EXPECT_EQ(a.err, b.err) << cmd;
  }
}

#ifdef AVDC_CLI_PATH
TEST_F(CliTest, BinaryExitStatus) {
  std::string g = write("c5.g6", "Dhc\n");
  const std::string bin = AVDC_CLI_PATH;
  EXPECT_EQ(std::system((bin + " oracle " + g + " > " + (dir_ / "o.txt").string()).c_str()), 0);
  EXPECT_EQ(read((dir_ / "o.txt").string()), "5\n");
  int status = std::system((bin + " nope 2> /dev/null").c_str());
  ASSERT_TRUE(WIFEXITED(status));
  EXPECT_EQ(WEXITSTATUS(status), 2);
}
#endif

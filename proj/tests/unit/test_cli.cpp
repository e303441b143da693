#include <gtest/gtest.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "cqs/evaluator.hpp"
#include "fixtures.hpp"

using namespace cqs;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Result {
  int status = -1;
  std::string out;
};

Result run(const std::string& args) {
  std::string cmd = std::string(CQSYNTH_PATH) + " " + args + " 2>&1";
  Result r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  int st = pclose(p);
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

class Cli : public ::testing::Test {
protected:
  fs::path dir;
  void SetUp() override {
    dir = fs::temp_directory_path() / ("cqsynth_cli_" + std::to_string(getpid()) + "_" +
                                       ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir);
  }
  void TearDown() override { fs::remove_all(dir); }
  std::string put(const std::string& name, const std::string& text) {
    auto p = dir / name;
    std::ofstream(p) << text;
    return p.string();
  }
};

std::string q(const std::string& s) { return "'" + s + "'"; }

}  // namespace

TEST_F(Cli, SynthesizeMotivatingTask) {
  auto r = run("synthesize --task " + q(fixture::corpus("tasks/motivating/task.json")) + " --emit json");
  ASSERT_EQ(r.status, 0) << r.out;
  auto doc = json::parse(r.out);
  EXPECT_EQ(doc["alpha_max"], "1");
  EXPECT_EQ(doc["beta_min"], 9);
  EXPECT_EQ(doc["selected"].size(), 1u);
  auto text = run("synthesize --task " + q(fixture::corpus("tasks/motivating/task.json")) + " --emit datalog");
  EXPECT_NE(text.out.find("str_equal"), std::string::npos);
  EXPECT_NE(text.out.find("\"CacheConfig\""), std::string::npos);
  EXPECT_NE(text.out.find("\"Log4jUtils\""), std::string::npos);
}

TEST_F(Cli, ContradictoryAnnotations) {
  auto src = put("bad.java", "/*@pos*/ /*@neg*/ void m() {}\nvoid n() {}\n");
  auto r = run("synthesize --source " + q(src) + " --target Method --description 'methods' --hmap " +
               q(fixture::corpus("hmap.json")));
  EXPECT_EQ(r.status, 1);
  EXPECT_NE(r.out.find("PartitionError"), std::string::npos) << r.out;
}

TEST_F(Cli, EmptyResultExitsTwo) {
  auto src = put("same.java", "/*@pos*/ int m() {}\nint m() {}\n");
  auto r = run("synthesize --source " + q(src) + " --target Method --description 'methods' --hmap " +
               q(fixture::corpus("hmap.json")));
  EXPECT_EQ(r.status, 2) << r.out;
}

TEST_F(Cli, SearchTenMethods) {
  auto schema = read_json_file(fixture::corpus("fig1/schema.json"));
  json facts = {{"Identifier", json::array()}, {"Type", json::array({{"T1", "Log4jUtils"}, {"T2", "int"}, {"T3", "CacheConfig"}})},
                {"Modifier", json::array({{"MDF1", "public"}})}, {"Method", json::array()}, {"Parameter", json::array()}};
  for (int i = 1; i <= 10; ++i) {
    std::string m = "M" + std::to_string(i), id = "I" + std::to_string(i);
    facts["Identifier"].push_back({id, "m" + std::to_string(i)});
    bool hit = i == 3 || i == 7;
    std::string ret = hit || i % 2 ? "T3" : "T2";
    std::string par = hit || i % 3 == 0 ? "T1" : "T2";
    if (i == 9) ret = "T2";
    facts["Method"].push_back({m, id, ret, "MDF1"});
    facts["Parameter"].push_back({"P" + std::to_string(i), id, par, m});
  }
  auto db = load_facts(schema, facts);
  auto g = fixture::fig1_query(db.schema());
  std::vector<std::string> want;
  for (int row : oracle::naive_rows(g, db)) want.push_back(db.text(0, row, 0));
  ASSERT_EQ(want, (std::vector<std::string>{"M3", "M7"}));
  auto rule = put("q.dl", fixture::kFig1Rule);
  auto r = run("search --query " + q(rule) + " --schema " + q(fixture::corpus("fig1/schema.json")) + " --facts " +
               q(put("facts.json", facts.dump())));
  ASSERT_EQ(r.status, 0) << r.out;
  EXPECT_EQ(r.out, "M3\nM7\n");
}

TEST_F(Cli, SearchMiniJavaSource) {
  auto src = put("t.java",
                 "public CacheConfig a(Log4jUtils u) {}\npublic int b(Log4jUtils u) {}\npublic CacheConfig c(int x) {}\n");
  auto rule = put("q.dl",
                  "out(X1, X2, R, X4) :- Method(X1, X2, R, X4), Type(R, RN), Parameter(_, _, P, X1), Type(P, PN), "
                  "str_equal(RN, \"CacheConfig\"), str_equal(PN, \"Log4jUtils\").\n");
  auto r = run("search --query " + q(rule) + " --source " + q(src));
  ASSERT_EQ(r.status, 0) << r.out;
  EXPECT_EQ(r.out.rfind("M1 ", 0), 0u) << r.out;
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 1);
}

TEST_F(Cli, SearchEmptyFactsAndUnknownRelation) {
  auto facts = put("empty.json", "{}");
  auto rule = put("q.dl", fixture::kFig1Rule);
  auto schema = q(fixture::corpus("fig1/schema.json"));
  auto r = run("search --query " + q(rule) + " --schema " + schema + " --facts " + q(facts));
  EXPECT_EQ(r.status, 0) << r.out;
  EXPECT_EQ(r.out, "");
  auto bad = put("bad.dl", "out(X1, X2) :- Klass(X1, X2).\n");
  r = run("search --query " + q(bad) + " --schema " + schema + " --facts " + q(facts));
  EXPECT_EQ(r.status, 1);
}

TEST_F(Cli, ExtractAndReduce) {
  auto out = (dir / "ex").string();
  auto r = run("extract " + q(fixture::corpus("fig1/example.java")) + " --target Method --out " + q(out));
  ASSERT_EQ(r.status, 0) << r.out;
  EXPECT_TRUE(fs::exists(out + "/schema.json")) << r.out;
  EXPECT_TRUE(fs::exists(out + "/facts.json"));
  EXPECT_TRUE(fs::exists(out + "/partition.json"));
  auto red = run("reduce --task " + q(fixture::corpus("fig1/task.json")));
  ASSERT_EQ(red.status, 0) << red.out;
  EXPECT_NE(red.out.find("dropped Modifier IndistinguishableActivation"), std::string::npos) << red.out;
}

TEST_F(Cli, GraphDumps) {
  auto r = run("graph");
  ASSERT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("digraph"), std::string::npos);
  auto red = run("graph --reduced --task " + q(fixture::corpus("fig1/task.json")));
  EXPECT_EQ(red.status, 0) << red.out;
}

TEST_F(Cli, BenchEmptyDirectory) {
  fs::create_directories(dir / "corpus");
  auto r = run("bench " + q((dir / "corpus").string()));
  EXPECT_EQ(r.status, 0) << r.out;
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 1);  // header only
}

TEST_F(Cli, MissingInputsFail) {
  EXPECT_EQ(run("synthesize").status, 1);
  EXPECT_EQ(run("synthesize --task " + q((dir / "nope.json").string())).status, 1);
}

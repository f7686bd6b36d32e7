#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  const std::string cmd = std::string(CYCLIC_ACTIONS_CLI) + " " + args + " 2>/dev/null";
  RunResult res;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return res;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) res.out.append(buf.data(), n);
  const int status = pclose(pipe);
  res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return res;
}

TEST(CliAkjTest, Examples) {
  EXPECT_EQ(run("akj --k 10 --j 2").out, "55\n");
  EXPECT_EQ(run("akj --k 4 --j 0").out, "1\n");
  EXPECT_EQ(run("akj --k 4 --j 5").out, "56\n");
  const auto j = nlohmann::json::parse(run("akj --k 4 --j 5 --format json").out);
  EXPECT_EQ(j.at("count"), "56");
  EXPECT_EQ(run("akj --k 0 --j 2").exit_code, 1);
  EXPECT_EQ(run("akj --k 3").exit_code, 1);
}

TEST(CliCensusTest, Genus26Json) {
  const RunResult r = run("census --p 5 --genus 26 --per-tuple --format json");
  EXPECT_EQ(r.exit_code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.at("total"), "283");
  EXPECT_EQ(j.at("reference_total"), "248");
  EXPECT_EQ(j.at("flags").size(), 2u);
  int flagged_rows = 0;
  for (const auto& row : j.at("rows")) flagged_rows += row.at("flags").empty() ? 0 : 1;
  EXPECT_EQ(flagged_rows, 2);
}

TEST(CliCensusTest, EmptyAndInvalid) {
  const RunResult empty = run("census --p 3 --genus 2");
  EXPECT_EQ(empty.exit_code, 0);
  EXPECT_NE(empty.out.find("total 0"), std::string::npos);
  EXPECT_EQ(run("census --p 4 --genus 10").exit_code, 1);
  EXPECT_EQ(run("census --p 5 --genus 0").exit_code, 1);
  EXPECT_EQ(run("census --p 5 --genus 26 --format xml").exit_code, 1);
}

TEST(CliCensusTest, CsvSchema) {
  const RunResult r = run("census --p 5 --genus 26 --format csv");
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "r,s,t,m,n,case,count,flags");
  const RunResult bare = run("census --p 5 --genus 26 --format csv --no-header");
  EXPECT_EQ(bare.out.substr(0, bare.out.find('\n')), "0,0,0,2,0,CASE_M,80,reference=55 computed=80");
}

TEST(CliTuplesTest, Genus26) {
  const RunResult r = run("tuples --p 5 --genus 26 --format csv --no-header");
  EXPECT_EQ(r.out,
            "0,0,0,2,0,CASE_M\n0,1,0,1,0,CASE_ST\n0,2,0,0,0,CASE_ST\n"
            "1,0,0,1,0,CASE_R\n1,1,0,0,0,CASE_ST\n2,0,0,0,0,CASE_R\n");
}

TEST(CliCanonicalTest, ListsStates) {
  const RunResult r = run("canonical --p 3 --tuple 0,1,0,0,0 --list");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.out, "p=3 v=0,1,0,0,0\n|1,0|||\n|2,0|||\n|4,0|||\ncount 3\n");
  EXPECT_EQ(run("canonical --p 5 --tuple 0,2,0,0,0 --max-states 10").exit_code, 2);
  EXPECT_EQ(run("canonical --p 3 --tuple 0,0,1,0,0").exit_code, 1);
}

TEST(CliOrbitsTest, Json) {
  const RunResult r = run("orbits --p 3 --tuple 0,0,0,2,0 --format json");
  EXPECT_EQ(r.exit_code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.at("total"), "5");
  EXPECT_EQ(j.at("valid_states"), 288);
}

TEST(CliVerifyTest, SingleTuple) {
  const RunResult r = run("verify --p 3 --tuple 0,1,0,0,0 --max-states 100000 --format json");
  EXPECT_EQ(r.exit_code, 0);
  const auto j = nlohmann::json::parse(r.out);
  ASSERT_EQ(j.at("rows").size(), 1u);
  const auto& row = j.at("rows")[0];
  EXPECT_EQ(row.at("theorem_count"), "3");
  EXPECT_EQ(row.at("canonical_count"), "3");
  EXPECT_EQ(row.at("orbit_count"), "3");
  EXPECT_TRUE(row.at("agreement").at("theorem_orbit").get<bool>());
  EXPECT_TRUE(row.at("agreement").at("theorem_canonical").get<bool>());
  EXPECT_TRUE(j.at("flags").empty());
}

TEST(CliVerifyTest, GenusProducesSixReports) {
  const RunResult r = run("verify --p 3 --genus 10 --max-states 1000000 --format json");
  EXPECT_EQ(r.exit_code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.at("rows").size(), 6u);
  EXPECT_TRUE(j.at("complete").get<bool>());
}

TEST(CliVerifyTest, BudgetExhaustionExitsTwo) {
  const RunResult r = run("verify --p 5 --tuple 0,0,0,2,0 --max-states 10 --format json");
  EXPECT_EQ(r.exit_code, 2);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_FALSE(j.at("rows")[0].at("complete").get<bool>());
  EXPECT_EQ(j.at("rows")[0].at("theorem_count"), "80");
}

TEST(CliVerifyTest, UsageErrors) {
  EXPECT_EQ(run("verify --p 3").exit_code, 1);
  EXPECT_EQ(run("verify --p 3 --genus 10 --tuple 0,1,0,0,0").exit_code, 1);
  EXPECT_EQ(run("verify --p 3 --tuple 0,1,0,0").exit_code, 1);
  EXPECT_EQ(run("verify --p 3 --tuple 0,1,0,0,0 --max-states 0").exit_code, 1);
  EXPECT_EQ(run("frobnicate").exit_code, 1);
}

TEST(CliVerifyTest, ReproducibleAcrossWorkers) {
  const std::string base = "verify --p 3 --genus 10 --max-states 1000000 --format json";
  const std::string first = run(base).out;
  EXPECT_FALSE(first.empty());
  EXPECT_EQ(run(base).out, first);
  EXPECT_EQ(run(base + " --workers 4").out, first);
}

}  // namespace

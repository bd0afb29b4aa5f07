#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"

using lcmf::cli::run_cli;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(f), {}};
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("lcmf_cli_test_" + name);
}

}  // namespace

TEST(Cli, Compute) {
  EXPECT_EQ(run({"compute", "sigma", "6"}).out, "2^6 * 3^3 * 5 * 7 = 60480\n");
  EXPECT_EQ(run({"compute", "pif", "--f", "m-1", "--x", "2"}).out, "2^2 * 3 = 12\n");
  EXPECT_EQ(run({"compute", "rho", "1"}).out, "1\n");
  EXPECT_EQ(run({"compute", "rho", "--n", "6"}).out, "2^3 * 3^2 * 5 = 360\n");
  EXPECT_EQ(run({"compute", "q", "7", "2"}).out, "2^3 * 3^2 * 5 = 360\n");
  EXPECT_EQ(run({"compute", "d", "2", "2"}).out, "2^2 * 3 = 12\n");
  EXPECT_EQ(run({"compute", "rho", "3"}).out, "2 * 3 = 6\n");
  EXPECT_EQ(run({"compute", "rho", "2"}).out, "2\n");
  EXPECT_EQ(run({"compute", "sigma", "5000", "--digits", "10"}).out.find('='), std::string::npos);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"compute"}).code, 2);
  EXPECT_EQ(run({"compute", "tau", "3"}).code, 2);
  EXPECT_EQ(run({"compute", "pif", "--f", "m^x", "--x", "2"}).code, 2);
  EXPECT_EQ(run({"compute", "pif", "--f", "m"}).code, 2);
  EXPECT_EQ(run({"compute", "q", "3", "4"}).code, 2);
  EXPECT_EQ(run({"verify", "theorem9"}).code, 2);
  EXPECT_EQ(run({"scan", "--format", "xml"}).code, 2);
  EXPECT_EQ(run({"scan", "--grid", "cubic"}).code, 2);
  EXPECT_EQ(run({"scan", "--workers", "0"}).code, 2);
  EXPECT_EQ(run({"compute", "rho", "3", "--budget", "0"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, BudgetExhaustionIsAFailure) {
  const auto r = run({"compute", "q", "40", "20", "--budget", "5"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("budget"), std::string::npos);
}

TEST(Cli, Verify) {
  const auto prop2 = run({"verify", "prop2", "--nmax", "1000"});
  EXPECT_EQ(prop2.code, 0);
  EXPECT_NE(prop2.out.find("pass"), std::string::npos);
  EXPECT_EQ(run({"verify", "theorem1", "--f", "m", "--xmax", "15"}).code, 0);
  EXPECT_EQ(run({"verify", "prop1", "--nmax", "0"}).code, 0);
  EXPECT_EQ(run({"verify", "prop3", "--nmax", "300"}).code, 0);
  EXPECT_EQ(run({"verify", "cor2", "--nmax", "12"}).code, 0);
  EXPECT_EQ(run({"verify", "eq14-16", "--nmax", "5000"}).code, 0);
}

TEST(Cli, VerifyValuationsWritesRecords) {
  const auto path = temp_path("theorem2.csv");
  EXPECT_EQ(run({"verify", "theorem2", "--nmax", "10", "--out", path.string()}).code, 0);
  const auto csv = slurp(path);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "n,p,v,witness_k");
  EXPECT_NE(csv.find("\n10,11,1,1\n"), std::string::npos);
  EXPECT_NE(csv.find("\n10,5,0,\n"), std::string::npos);
  std::filesystem::remove(path);
}

TEST(Cli, Triangle) {
  const auto r = run({"triangle", "--nmax", "7"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("1,420,360,360,24,12,2,1\n"), std::string::npos);
  const auto j = nlohmann::json::parse(run({"triangle", "--nmax", "4", "--format", "json"}).out);
  EXPECT_EQ(j[4][1], "12");
}

TEST(Cli, Constant) {
  const auto r = run({"constant", "--x", "1000", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_LE(j["lo"].get<double>(), 0.755);
  EXPECT_GE(j["hi"].get<double>(), 0.755);
  EXPECT_EQ(run({"constant", "--x", "50"}).code, 2);
}

TEST(Cli, ScanFilesAreDeterministic) {
  const auto a = temp_path("scan_a.csv");
  const auto b = temp_path("scan_b.csv");
  const auto blocks = temp_path("blocks.csv");
  ASSERT_EQ(run({"scan", "--grid", "dyadic", "--nmin", "16", "--nmax", "1048576", "--workers", "1",
                 "--out", a.string(), "--blocks", blocks.string()})
                .code,
            0);
  ASSERT_EQ(run({"scan", "--grid", "dyadic:4:20", "--workers", "8", "--out", b.string()}).code, 0);
  const auto text = slurp(a);
  EXPECT_EQ(text, slurp(b));
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 18);
  EXPECT_NE(slurp(blocks).find("j,count"), std::string::npos);
  for (const auto& p : {a, b, blocks}) std::filesystem::remove(p);
}

TEST(Cli, ScanRecordAtHundred) {
  const auto r = run({"scan", "--grid", "list:100", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j[0]["card_A"], 4);
  EXPECT_NEAR(j[0]["conj2_stat"].get<double>(), 1.8421, 1e-4);
}

TEST(Cli, ScanGnuplotStub) {
  const auto csv = temp_path("scan_g.csv");
  const auto gp = temp_path("scan.gp");
  ASSERT_EQ(run({"scan", "--grid", "step:50", "--nmax", "500", "--out", csv.string(), "--gnuplot",
                 gp.string()})
                .code,
            0);
  EXPECT_NE(slurp(gp).find(csv.string()), std::string::npos);
  std::filesystem::remove(csv);
  std::filesystem::remove(gp);
}

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "nilclean/constructors.hpp"
#include "nilclean/serialize.hpp"

using namespace nilclean;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "nilclean");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path golden(const std::string& name) {
  return std::filesystem::path(NILCLEAN_GOLDEN_DIR) / name;
}

/// Compares against a fixture; NILCLEAN_UPDATE_GOLDEN=1 rewrites it instead.
void expect_golden(const std::string& name, const std::string& actual) {
  const auto path = golden(name);
  if (const char* u = std::getenv("NILCLEAN_UPDATE_GOLDEN"); u && std::string(u) == "1") {
    std::ofstream(path) << actual;
    return;
  }
  std::ifstream in(path);
  ASSERT_TRUE(in) << "missing fixture " << path;
  std::stringstream expected;
  expected << in.rdbuf();
  EXPECT_EQ(actual, expected.str()) << name;
}

std::filesystem::path temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << content;
  return path;
}

}  // namespace

TEST(Cli, InfoJson) {
  const auto r = run({"info", "Z6", "--format", "json"});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  const auto j = Json::parse(r.out);
  EXPECT_EQ(j["units"], Json::parse("[1,5]"));
  EXPECT_EQ(j["idempotents"], Json::parse("[0,1,3,4]"));
  EXPECT_EQ(j["nil_clean_ring"], false);
  expect_golden("info_T2_Z2.json", run({"--format", "json", "info", "T2(Z2)"}).out);
}

TEST(Cli, InfoTable) {
  const auto r = run({"info", "Z8"});
  ASSERT_EQ(r.code, cli::kOk);
  EXPECT_NE(r.out.find("nil-clean     true"), std::string::npos) << r.out;
}

TEST(Cli, IdealVerdicts) {
  const auto nc = run({"ideal", "Z6", "--gens", "2", "--property", "nil-clean", "--format", "json"});
  EXPECT_EQ(nc.code, cli::kFalse);
  const auto j = Json::parse(nc.out);
  EXPECT_EQ(j["holds"], false);
  EXPECT_EQ(j["witness"], 2);
  EXPECT_TRUE(j["witness_decompositions"].empty());
  expect_golden("ideal_Z6_nil_clean.json", nc.out);

  const auto cl = run({"ideal", "Z6", "--gens", "2", "--property", "clean", "--format", "json"});
  EXPECT_EQ(cl.code, cli::kOk);
  EXPECT_EQ(Json::parse(cl.out)["holds"], true);

  EXPECT_EQ(run({"ideal", "Z6", "--gens", "2", "--property", "shiny"}).code, cli::kUsage);
  EXPECT_EQ(run({"ideal", "Z6", "--gens", "9"}).code, cli::kUsage);
}

TEST(Cli, Decompose) {
  const auto r = run({"decompose", "Z6", "2", "--kind", "clean", "--format", "json"});
  EXPECT_EQ(r.code, cli::kOk);
  expect_golden("decompose_Z6_2_clean.json", r.out);
  EXPECT_EQ(run({"decompose", "Z6", "2"}).code, cli::kFalse);
  const auto z4 = run({"decompose", "Z4", "3"});
  EXPECT_EQ(z4.code, cli::kOk);
  EXPECT_NE(z4.out.find("e=1  n=2  index 2"), std::string::npos) << z4.out;
  EXPECT_EQ(run({"decompose", "Z4", "3", "--kind", "both"}).code, cli::kUsage);
}

TEST(Cli, ParseErrorsAreUsageErrors) {
  const auto r = run({"info", "Zx"});
  EXPECT_EQ(r.code, cli::kUsage);
  EXPECT_NE(r.err.find("position 1"), std::string::npos) << r.err;
  EXPECT_EQ(run({}).code, cli::kUsage);
  EXPECT_EQ(run({"frobnicate"}).code, cli::kUsage);
}

TEST(Cli, CapsExitWithThree) {
  EXPECT_EQ(run({"--order-cap", "10", "info", "Z12"}).code, cli::kCap);
  EXPECT_EQ(run({"info", "Z12", "--order-cap", "10"}).code, cli::kCap);
  EXPECT_EQ(run({"theorems", "L1", "--family", "Z12", "--order-cap", "10"}).code, cli::kCap);
}

TEST(Cli, TheoremsGolden) {
  const auto r = run({"theorems", "--format", "json"});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  const auto j = Json::parse(r.out);
  EXPECT_EQ(j["exploratory"], false);
  EXPECT_EQ(j["reports"].size(), 27u);
  expect_golden("theorems.json", r.out);
}

TEST(Cli, TheoremsSelection) {
  const auto r = run({"theorems", "L1", "PPP1", "--family", "Z6", "Z8", "--format", "json"});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  const auto j = Json::parse(r.out);
  ASSERT_EQ(j["reports"].size(), 2u);
  EXPECT_EQ(j["reports"][0]["id"], "L1");
  EXPECT_EQ(j["reports"][0]["instances_tested"], 8);
  EXPECT_EQ(run({"theorems", "T99"}).code, cli::kUsage);
  const auto list = run({"theorems", "--list"});
  EXPECT_EQ(list.code, cli::kOk);
  EXPECT_NE(list.out.find("morita_zero_strong"), std::string::npos);
}

TEST(Cli, Explore) {
  const auto r = run({"theorems", "--explore", "--format", "json"});
  EXPECT_EQ(r.code, cli::kOk) << r.err;
  EXPECT_EQ(Json::parse(r.out)["exploratory"], true);
}

TEST(Cli, ExportImportRoundTrip) {
  const auto exported = run({"export", "T2(Z2)"});
  ASSERT_EQ(exported.code, cli::kOk);
  const auto path = temp_file("nilclean_t2z2.json", exported.out);
  const auto imported = run({"import", path.string(), "--format", "json"});
  ASSERT_EQ(imported.code, cli::kOk) << imported.err;
  auto info = Json::parse(run({"info", "T2(Z2)", "--format", "json"}).out);
  auto j = Json::parse(imported.out);
  j.erase("ring");
  info.erase("ring");
  EXPECT_EQ(j, info);
}

TEST(Cli, CorruptedTablesExitWithFive) {
  auto table = table_to_json(*build_ring("Z6"));
  table["mul"][2][3] = 1;
  const auto path = temp_file("nilclean_bad.json", dump(table));
  const auto r = run({"import", path.string()});
  EXPECT_EQ(r.code, cli::kAxiom);
  EXPECT_NE(r.err.find("associativity"), std::string::npos) << r.err;
  EXPECT_EQ(run({"theorems", "L1", "--table", path.string()}).code, cli::kAxiom);
}

TEST(Cli, LargeImportsAreRefused) {
  const auto path = temp_file("nilclean_z100.json", dump(table_to_json(*build_ring("Z100"))));
  EXPECT_EQ(run({"import", path.string()}).code, cli::kCap);
  EXPECT_EQ(run({"import", "/nonexistent/table.json"}).code, cli::kUsage);
}

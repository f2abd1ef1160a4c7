#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "ldc_cli.hpp"

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome cli(std::vector<std::string> args) {
  args.insert(args.begin(), "ldc_cli");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = ldc::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

nlohmann::json schema(const std::string& name) {
  std::ifstream in(std::string(LDC_SCHEMA_DIR) + "/" + name);
  return nlohmann::json::parse(in);
}

// Required keys present and no keys outside "properties".
void expect_keys_match(const nlohmann::ordered_json& doc, const nlohmann::json& s) {
  ASSERT_TRUE(doc.is_object());
  for (const auto& key : s.at("required")) EXPECT_TRUE(doc.contains(key.get<std::string>())) << key;
  for (const auto& [key, value] : doc.items()) EXPECT_TRUE(s.at("properties").contains(key)) << key;
}

}  // namespace

TEST(Cli, Digits) {
  auto r = cli({"digits", "--a", "2", "--b", "10", "--count", "50"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "24813612512481361251248136125124813612512481371251\n");
  r = cli({"digits", "--a", "9", "--b", "10", "--count", "10", "--mode", "exact"});
  EXPECT_EQ(r.out, "9876554433\n");
  r = cli({"digits", "--a", "2", "--b", "10", "--count", "4", "--start", "0"});
  EXPECT_EQ(r.out, "1248\n");
  r = cli({"digits", "--a", "10", "--b", "10", "--count", "5"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("IntegralPowerOfBase"), std::string::npos) << r.err;
  EXPECT_TRUE(r.out.empty());
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(cli({}).code, 2);
  EXPECT_EQ(cli({"digits", "--a", "2.5", "--b", "10", "--count", "5"}).code, 2);
  EXPECT_EQ(cli({"digits", "--a", "2", "--b", "10"}).code, 2);
  EXPECT_EQ(cli({"digits", "--a", "2", "--b", "10", "--count", "5", "--start", "3"}).code, 2);
  EXPECT_EQ(cli({"complexity", "--a", "2", "--b", "10", "--n-max", "3", "--method", "guess"}).code, 2);
  EXPECT_EQ(cli({"average"}).code, 2);
  EXPECT_EQ(cli({"average", "--b", "10", "--b-max", "20"}).code, 2);
  EXPECT_EQ(cli({"--help"}).code, 0);
}

TEST(Cli, ComplexityFormulaCsv) {
  const auto r = cli({"complexity", "--a", "2", "--b", "10", "--n-max", "5", "--method", "formula"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out,
            "n,p,method,prefix_length\n1,9,formula,\n2,13,formula,\n3,17,formula,\n4,21,formula,\n5,25,formula,\n");
}

TEST(Cli, ComplexityEmpiricalMatchesFormula) {
  const auto r = cli({"complexity", "--a", "2", "--b", "10", "--n-max", "5", "--method", "empirical", "--prefix",
                      "100000"});
  EXPECT_EQ(r.code, 0);
  const auto rows = lines(r.out);
  ASSERT_EQ(rows.size(), 6U);
  EXPECT_EQ(rows[5], "5,25,empirical,100000");
}

TEST(Cli, ComplexityOracleCounterexample) {
  const auto r = cli({"complexity", "--a", "2", "--b", "12", "--n-max", "3", "--method", "oracle", "--format",
                      "json"});
  EXPECT_EQ(r.code, 0);
  const auto doc = nlohmann::ordered_json::parse(r.out);
  expect_keys_match(doc, schema("profile.schema.json"));
  EXPECT_EQ(doc["points"], nlohmann::json::parse("[[1,11],[2,16],[3,20]]"));
  EXPECT_EQ(doc["method"], "oracle");
  // formula needs a squarefree base
  const auto f = cli({"complexity", "--a", "2", "--b", "12", "--n-max", "3", "--method", "formula"});
  EXPECT_EQ(f.code, 2);
  EXPECT_NE(f.err.find("BaseNotSquarefree"), std::string::npos) << f.err;
}

TEST(Cli, ComplexityJsonSchema) {
  const auto r = cli({"complexity", "--a", "3/2", "--b", "10", "--n-max", "4", "--method", "empirical", "--prefix",
                      "5000", "--converge", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  const auto doc = nlohmann::ordered_json::parse(r.out);
  expect_keys_match(doc, schema("profile.schema.json"));
  EXPECT_EQ(doc["a"], "3/2");
  EXPECT_TRUE(doc["converged"].get<bool>());
}

TEST(Cli, Verify) {
  auto r = cli({"verify", "--b-max", "15", "--k-max", "6"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(lines(r.out).back().rfind("bases=", 0), 0U);
  EXPECT_NE(r.out.find("discrepancies=0"), std::string::npos);
  EXPECT_EQ(cli({"verify", "--b-max", "4"}).code, 2);
}

TEST(Cli, GoodPairs) {
  auto r = cli({"goodpairs", "--c-max", "10"});
  EXPECT_EQ(r.code, 0);
  const auto rows = lines(r.out);
  EXPECT_EQ(rows.front(), "c,d,b,r,s");
  EXPECT_NE(std::find(rows.begin(), rows.end(), "4,5,10,2,1"), rows.end());
  r = cli({"goodpairs", "--c-max", "20", "--stats"});
  EXPECT_EQ(lines(r.out).front(), "c,count,ratio,cumulative_ratio");
  EXPECT_EQ(lines(r.out).size(), 21U);
}

TEST(Cli, Graph) {
  auto r = cli({"graph", "--a", "2", "--b", "10"});
  EXPECT_EQ(r.code, 0);
  const auto doc = nlohmann::ordered_json::parse(r.out);
  expect_keys_match(doc, schema("cyclomatic.schema.json"));
  EXPECT_EQ(doc.dump(), R"({"e":13,"n":9,"p":1,"C":5})");

  r = cli({"graph", "--a", "2", "--b", "10", "--rauzy", "3", "--converge", "--prefix", "1000", "--emit", "json"});
  EXPECT_EQ(r.code, 0);
  const auto g = nlohmann::ordered_json::parse(r.out);
  expect_keys_match(g, schema("graph.schema.json"));
  EXPECT_EQ(g["vertices"].size(), 17U);
  EXPECT_EQ(g["edges"].size(), 21U);

  r = cli({"graph", "--a", "2", "--b", "10", "--prefix", "20", "--emit", "edges"});
  EXPECT_NE(lines(r.out).size(), 0U);
  EXPECT_EQ(lines(r.out).front(), "1 2");
  EXPECT_EQ(cli({"graph", "--a", "2", "--b", "10", "--prefix", "1"}).code, 2);
}

TEST(Cli, Average) {
  auto r = cli({"average", "--b", "10"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "b,cbar,cbar_decimal,deficit\n10,25/4,6.250000,3.750000\n");
  r = cli({"average", "--b", "12"});
  EXPECT_EQ(r.code, 2);
}

TEST(Cli, DeterministicAcrossThreadCounts) {
  const std::vector<std::vector<std::string>> commands{
      {"verify", "--b-max", "20", "--k-max", "5"},
      {"average", "--b-max", "200"},
      {"goodpairs", "--c-max", "30", "--stats"},
  };
  for (const auto& cmd : commands) {
    auto one = cmd;
    one.insert(one.begin(), {"--threads", "1"});
    auto four = cmd;
    four.insert(four.begin(), {"--threads", "4"});
    const auto a = cli(one);
    const auto b = cli(four);
    EXPECT_EQ(a.code, b.code);
    EXPECT_EQ(a.out, b.out) << cmd.front();
  }
}

TEST(Cli, OutFlagWritesFile) {
  const auto path = std::filesystem::temp_directory_path() / "ldc_cli_out_test.csv";
  const auto r = cli({"--out", path.string(), "average", "--b", "7"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  std::stringstream text;
  text << in.rdbuf();
  EXPECT_EQ(text.str(), "b,cbar,cbar_decimal,deficit\n7,22/5,4.400000,2.600000\n");
  std::filesystem::remove(path);
}

TEST(Cli, LkSetJsonSchema) {
  const auto doc = ldc::lk_set_json(ldc::lk_set(ldc::parse_rational("2"), ldc::Natural(10), 2));
  expect_keys_match(doc, schema("lkset.schema.json"));
  EXPECT_EQ(doc["points"].size(), 13U);
  EXPECT_EQ(doc["points"][0], "1/1");
}

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "psl2cov_cli/app.hpp"
#include "psl2cov_cli/json_io.hpp"

namespace psl2cov::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "psl2cov");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

json payload(const Result& r) { return json::parse(r.out).at("payload"); }

TEST(CliTable, TextShape) {
  const auto r = invoke({"table", "--q", "8", "--format", "text"});
  ASSERT_EQ(r.code, 0);
  std::istringstream lines(r.out);
  std::string line;
  std::vector<std::string> all;
  while (std::getline(lines, line)) all.push_back(line);
  // title, class header, sizes, rule, then one row per character
  ASSERT_EQ(all.size(), 4u + 9u);
  std::istringstream header(all[1]);
  std::vector<std::string> columns;
  for (std::string w; header >> w;) columns.push_back(w);
  EXPECT_EQ(columns.size(), 1u + 9u);
}

TEST(CliTable, JsonPayload) {
  const auto r = invoke({"table", "--q", "11", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  const auto doc = json::parse(r.out);
  EXPECT_EQ(doc.at("schema_version"), kSchemaVersion);
  EXPECT_TRUE(doc.contains("generated_at"));
  EXPECT_EQ(doc.at("payload").at("classes").at(7).at("size"), 55);
}

TEST(CliTable, InvalidQ) {
  const auto r = invoke({"table", "--q", "12"});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_NE(r.err.find("NotAPrimePower"), std::string::npos);
}

TEST(CliTable, JsonRoundTrip) {
  for (const char* q : {"8", "11", "13", "49"}) {
    const auto r = invoke({"table", "--q", q, "--format", "json", "--reproducible"});
    const auto p = payload(r);
    const auto table = table_from_json(p);
    EXPECT_EQ(to_json(table), p);
    const auto original = character_table(group_params(std::stoull(q)));
    for (std::size_t i = 0; i < original.characters().size(); ++i) {
      for (std::size_t c = 0; c < original.classes().size(); ++c) {
        EXPECT_EQ(table.characters()[i].values[c], original.characters()[i].values[c]);
      }
    }
  }
}

TEST(CliDecompose, Examples) {
  auto r = invoke({"decompose", "--q", "8", "--char", "st", "--power", "2", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  auto p = payload(r);
  EXPECT_TRUE(p.at("complete").get<bool>());
  for (const auto& e : p.at("multiplicities")) EXPECT_GE(e.at("multiplicity").get<int>(), 1);

  r = invoke({"decompose", "--q", "8", "--char", "dd:3", "--power", "3", "--format", "json"});
  p = payload(r);
  EXPECT_FALSE(p.at("complete").get<bool>());
  EXPECT_EQ(p.at("multiplicities").at(0).at("label"), "triv");
  EXPECT_EQ(p.at("multiplicities").at(0).at("multiplicity"), 0);

  r = invoke({"decompose", "--q", "13", "--char", "half+:1", "--power", "2", "--format", "json"});
  const auto d = decomposition_from_json(payload(r));
  EXPECT_EQ(d.decomposition.multiplicity({CharKind::HalfPlus2, 0}), 0);
  EXPECT_EQ(to_json(d), payload(r));
}

TEST(CliDecompose, BadLabels) {
  EXPECT_EQ(invoke({"decompose", "--q", "8", "--char", "pp:9"}).code, kExitUsage);
  EXPECT_EQ(invoke({"decompose", "--q", "11", "--char", "half+:1"}).code, kExitUsage);
  EXPECT_EQ(invoke({"decompose", "--q", "11", "--char", "bogus"}).code, kExitUsage);
  EXPECT_EQ(invoke({"decompose", "--q", "11", "--char", "st", "--power", "0"}).code, kExitUsage);
}

TEST(CliDecompose, LargeMultiplicitiesRoundTripAsStrings) {
  const auto r = invoke({"decompose", "--q", "101", "--char", "st", "--power", "12", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  const auto p = payload(r);
  EXPECT_TRUE(p.at("dimension").is_string());
  const auto d = decomposition_from_json(p);
  EXPECT_EQ(d.dimension, boost::multiprecision::pow(BigInt(101), 12));
  EXPECT_EQ(to_json(d), p);
}

TEST(CliCovering, Examples) {
  auto p = payload(invoke({"covering", "--q", "8", "--format", "json"}));
  EXPECT_EQ(p.at("covering_number"), 4);
  EXPECT_EQ(p.at("matches_theorem"), true);
  const auto report = covering_from_json(p);
  EXPECT_EQ(to_json(report, group_params(8), kDefaultExponentCap), p);

  p = payload(invoke({"covering", "--q", "27", "--format", "json"}));
  EXPECT_EQ(p.at("covering_number"), 4);
  EXPECT_EQ(p.at("case"), "3mod4");

  p = payload(invoke({"covering", "--q", "5", "--format", "json"}));
  EXPECT_EQ(p.at("theorem_expected"), "not-applicable");
  EXPECT_EQ(p.at("matches_theorem"), "not-applicable");
}

TEST(CliCovering, ExponentCap) {
  const auto r = invoke({"covering", "--q", "8", "--tmax", "3"});
  EXPECT_EQ(r.code, kExitExponentCap);
  EXPECT_NE(r.err.find("ExponentCapExceeded"), std::string::npos);
}

TEST(CliVerify, ElevenWithOracle) {
  const auto r = invoke({"verify", "--q", "11", "--oracle", "--format", "json"});
  EXPECT_EQ(r.code, 0);
  const auto p = payload(r);
  EXPECT_EQ(p.at("oracle").at("status"), "passed");
  EXPECT_EQ(p.at("internal_failure"), false);
  EXPECT_TRUE(p.at("lemmas").at("counterexamples").empty());
  for (const auto& f : p.at("claims").at("findings")) {
    EXPECT_TRUE(f.contains("claimed"));
    EXPECT_TRUE(f.contains("computed"));
    EXPECT_NE(f.at("claimed"), f.at("computed"));
  }
}

TEST(CliVerify, ThirteenFlagsQuotedForms) {
  const auto p = payload(invoke({"verify", "--q", "13", "--format", "json"}));
  EXPECT_FALSE(p.at("lemmas").at("quoted_form_discrepancies").empty());
  EXPECT_TRUE(p.at("lemmas").at("counterexamples").empty());
  EXPECT_GT(p.at("claims").at("match").get<int>(), 0);
  EXPECT_EQ(p.at("oracle").at("status"), "not-requested");
}

TEST(CliVerify, OracleSkippedAboveCap) {
  const auto r = invoke({"verify", "--q", "64", "--oracle", "--format", "json"});
  EXPECT_EQ(r.code, 0);
  const auto o = payload(r).at("oracle");
  EXPECT_EQ(o.at("status"), "skipped");
  EXPECT_NE(o.at("reason").get<std::string>().find("CapExceeded"), std::string::npos);
}

TEST(CliVerify, ReproducibleOutputIsStable) {
  const auto a = invoke({"verify", "--q", "13", "--oracle", "--reproducible", "--format", "json"});
  const auto b = invoke({"verify", "--q", "13", "--oracle", "--reproducible", "--format", "json"});
  EXPECT_EQ(a.out, b.out);
  EXPECT_FALSE(json::parse(a.out).contains("generated_at"));
}

TEST(CliSweep, Rows) {
  auto r = invoke({"sweep", "--q-min", "8", "--q-max", "32"});
  ASSERT_EQ(r.code, 0);
  std::istringstream lines(r.out);
  std::string line;
  std::getline(lines, line);
  EXPECT_EQ(line, kSweepHeader);
  std::vector<std::uint64_t> qs;
  while (std::getline(lines, line)) qs.push_back(std::stoull(line.substr(0, line.find(','))));
  EXPECT_EQ(qs, (std::vector<std::uint64_t>{8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29, 31, 32}));

  r = invoke({"sweep", "--q-min", "8", "--q-max", "8"});
  EXPECT_EQ(r.out, std::string(kSweepHeader) + "\n8,even,4,4,true\n");

  r = invoke({"sweep", "--q-min", "10", "--q-max", "10"});
  EXPECT_EQ(r.out, std::string(kSweepHeader) + "\n");
}

TEST(CliSweep, OrderIndependentOfJobs) {
  const auto one = invoke({"sweep", "--q-min", "4", "--q-max", "40", "--jobs", "1"});
  const auto four = invoke({"sweep", "--q-min", "4", "--q-max", "40", "--jobs", "4"});
  EXPECT_EQ(one.out, four.out);
  EXPECT_NE(one.out.find("\n5,1mod4,3,NA,NA\n"), std::string::npos);
}

TEST(CliSweep, BadRangesAndErrors) {
  EXPECT_EQ(invoke({"sweep", "--q-min", "3", "--q-max", "10"}).code, kExitUsage);
  EXPECT_EQ(invoke({"sweep", "--q-min", "20", "--q-max", "10"}).code, kExitUsage);
  const auto r = invoke({"sweep", "--q-min", "8", "--q-max", "9", "--tmax", "3"});
  EXPECT_EQ(r.code, kExitExponentCap);
  EXPECT_NE(r.out.find("8,even,ERROR,4,ERROR"), std::string::npos);
  EXPECT_NE(r.out.find("9,1mod4,3,3,true"), std::string::npos);
}

TEST(CliSweep, JsonRowsRoundTrip) {
  const auto p = payload(invoke({"sweep", "--q-min", "4", "--q-max", "16", "--format", "json"}));
  for (const auto& row : p.at("rows")) EXPECT_EQ(to_json(sweep_row_from_json(row)), row);
}

TEST(CliSweep, WritesFile) {
  const auto path = std::filesystem::temp_directory_path() / "psl2cov_sweep_test.csv";
  const auto r = invoke({"sweep", "--q-min", "8", "--q-max", "9", "--out", path.string()});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  std::stringstream content;
  content << in.rdbuf();
  EXPECT_EQ(content.str(), std::string(kSweepHeader) + "\n8,even,4,4,true\n9,1mod4,3,3,true\n");
  std::filesystem::remove(path);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(invoke({}).code, kExitUsage);
  EXPECT_EQ(invoke({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(invoke({"table"}).code, kExitUsage);
  EXPECT_EQ(invoke({"table", "--q", "8", "--format", "xml"}).code, kExitUsage);
  EXPECT_EQ(invoke({"--help"}).code, 0);
}

TEST(JsonIo, CyclotomicRoundTrip) {
  const auto x = Cyclotomic::root(12, 5) * BigInt(-3) + Cyclotomic::root(12, 1);
  const auto j = to_json(x);
  EXPECT_EQ(j.at("conductor"), 12);
  EXPECT_EQ(j.at("terms"), json::parse("[[1,1],[5,-3]]"));
  EXPECT_TRUE(cyclotomic_from_json(j).same_representation(x));
  const BigInt huge = boost::multiprecision::pow(BigInt(10), 30);
  EXPECT_EQ(big_to_json(huge), "1000000000000000000000000000000");
  EXPECT_EQ(big_from_json(big_to_json(huge)), huge);
}

}  // namespace
}  // namespace psl2cov::cli

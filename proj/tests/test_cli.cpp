#include <gtest/gtest.h>

#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cli.hpp"
#include "planepart/asymptotics.hpp"

namespace {

using nlohmann::json;
namespace cli = planepart::cli;

struct Result {
  int status;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, std::optional<std::string> env_cache = std::nullopt) {
  std::ostringstream out;
  std::ostringstream err;
  const int status = cli::run(args, out, err, env_cache);
  return {status, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> v;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) v.push_back(l);
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> v;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      v.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  v.push_back(cur);
  return v;
}

std::vector<std::string> words(const std::string& s) {
  std::vector<std::string> v;
  std::istringstream in(s);
  for (std::string w; in >> w;) v.push_back(w);
  return v;
}

class TempFile {
 public:
  TempFile() : path_(std::filesystem::temp_directory_path() / ("planepart_cache_" + std::to_string(::getpid()) + "_" + std::to_string(counter_++) + ".json")) {
    std::filesystem::remove(path_);
  }
  ~TempFile() { std::filesystem::remove(path_); }
  std::string str() const { return path_.string(); }
  std::string read() const {
    std::ifstream in(path_);
    return {std::istreambuf_iterator<char>(in), {}};
  }

 private:
  static inline int counter_ = 0;
  std::filesystem::path path_;
};

TEST(CliCount, Examples) {
  EXPECT_EQ(run({"count", "p2d", "--n", "20"}).out, "75278\n");
  EXPECT_EQ(run({"count", "p2d", "--n", "0"}).out, "1\n");
  EXPECT_EQ(run({"count", "p2d", "--n", "10", "--max-parts", "9"}).out, "458\n");
  EXPECT_EQ(run({"count", "p1d", "--n", "100", "--max-parts", "20"}).out, "97132873\n");
}

TEST(CliCount, Formats) {
  EXPECT_EQ(run({"--format", "csv", "count", "p2d", "--n", "10", "--max-parts", "9"}).out,
            "kind,n,max_parts,count\np2d,10,9,458\n");
  const auto j = json::parse(run({"count", "p1d", "--n", "50", "--format", "json"}).out);
  EXPECT_EQ(j["count"], "204226");
  EXPECT_TRUE(j["max_parts"].is_null());
}

TEST(CliCount, ExitStatuses) {
  EXPECT_EQ(run({"count", "p2d"}).status, cli::kUsage);
  EXPECT_EQ(run({"count", "p3d", "--n", "3"}).status, cli::kUsage);
  EXPECT_EQ(run({"count", "p2d", "--n", "-3"}).status, cli::kUsage);
  EXPECT_EQ(run({"count", "p2d", "--n", "0x10"}).status, cli::kUsage);
  EXPECT_EQ(run({"count", "p2d", "--n", "5", "--max-parts", "0"}).status, cli::kUsage);
  EXPECT_EQ(run({"--format", "xml", "count", "p2d", "--n", "5"}).status, cli::kUsage);
  EXPECT_EQ(run({}).status, cli::kUsage);
  const auto r = run({"count", "p2d", "--n", "40", "--max-parts", "30"});
  EXPECT_EQ(r.status, cli::kResourceCeiling);
  EXPECT_NE(r.err.find("ceiling"), std::string::npos);
  EXPECT_TRUE(r.out.empty());
  EXPECT_EQ(run({"--ceiling", "40", "count", "p2d", "--n", "31", "--max-parts", "1"}).out, "1\n");
}

TEST(CliCount, CacheWarmRunIsByteIdentical) {
  TempFile cache;
  const auto cold = run({"--cache", cache.str(), "count", "p2d", "--n", "60"});
  ASSERT_EQ(cold.status, 0);
  const auto stored = json::parse(cache.read());
  EXPECT_EQ(stored["p2d"]["60"], "314689799781");
  EXPECT_TRUE(stored["p1d"].is_object());
  const auto warm = run({"--cache", cache.str(), "count", "p2d", "--n", "60"});
  EXPECT_EQ(warm.out, cold.out);
  EXPECT_EQ(warm.status, 0);
}

TEST(CliCount, CacheValuesAreUsedAndEnvVarWorks) {
  TempFile cache;
  {
    std::ofstream out(cache.str());
    out << R"({"p1d": {"7": "99"}, "p2d": {}})";
  }
  // A planted value proves the lookup path is taken.
  EXPECT_EQ(run({"count", "p1d", "--n", "7"}, cache.str()).out, "99\n");
  EXPECT_EQ(run({"count", "p1d", "--n", "8"}, cache.str()).out, "22\n");
  EXPECT_EQ(json::parse(cache.read())["p1d"]["8"], "22");
}

TEST(CliCount, MalformedCacheIsRejected) {
  TempFile cache;
  {
    std::ofstream out(cache.str());
    out << R"({"p2d": {"4": 13}})";
  }
  EXPECT_EQ(run({"--cache", cache.str(), "count", "p2d", "--n", "4"}).status, cli::kUsage);
}

TEST(CliEstimate, Examples) {
  auto r = run({"--format", "json", "estimate", "--n", "20", "--max-parts", "19", "--base", "exact"});
  auto j = json::parse(r.out);
  EXPECT_EQ(j["rounded"], 75033);
  EXPECT_EQ(j["in_window"], true);
  j = json::parse(run({"--format", "json", "estimate", "--n", "15", "--max-parts", "14", "--base", "pr"}).out);
  EXPECT_EQ(j["rounded"], 7073);
  j = json::parse(run({"--format", "json", "estimate", "--n", "15", "--max-parts", "14", "--base", "wright"}).out);
  EXPECT_EQ(j["rounded"], 7082);
}

TEST(CliEstimate, WindowWarning) {
  auto r = run({"estimate", "--n", "10", "--max-parts", "1"});
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.err.rfind("warning:", 0), 0u);
  EXPECT_NE(r.out.find("outside"), std::string::npos);
  r = run({"estimate", "--n", "10", "--max-parts", "2"});
  EXPECT_TRUE(r.err.empty());
  r = run({"--format", "csv", "estimate", "--n", "10", "--max-parts", "10"});
  EXPECT_EQ(r.err.rfind("warning:", 0), 0u);
  EXPECT_EQ(split(lines(r.out)[1], ',').back(), "false");
}

TEST(CliEstimate, Unrestricted) {
  auto j = json::parse(run({"--format", "json", "estimate", "--n", "10", "--base", "pr"}).out);
  EXPECT_DOUBLE_EQ(j["estimate"].get<double>(), planepart::p2d_unrestricted_estimate(10, planepart::CVariant::kPr));
  EXPECT_TRUE(j["in_window"].is_null());
  j = json::parse(run({"--format", "json", "estimate", "--n", "10"}).out);
  EXPECT_EQ(j["rounded"], 500);
  EXPECT_EQ(run({"estimate", "--n", "10", "--base", "ramanujan"}).status, cli::kUsage);
}

TEST(CliZn, OneDimensional) {
  auto r = run({"zn", "--dim", "1", "--x", "0.5", "--n-max", "2"});
  ASSERT_EQ(r.status, 0);
  auto ls = lines(r.out);
  EXPECT_EQ(words(ls[2])[1], "2.666667");
  EXPECT_EQ(ls.back().rfind("max relative deviation:", 0), 0u);

  r = run({"zn", "--dim", "1", "--x", "0.5", "--n-max", "40"});
  ls = lines(r.out);
  EXPECT_EQ(words(ls[40])[2], "1.000000");
}

TEST(CliZn, TwoDimensionalYIncreases) {
  const auto j = json::parse(run({"--format", "json", "zn", "--dim", "2", "--x", "0.5", "--n-max", "30"}).out);
  const auto& rows = j["rows"];
  ASSERT_EQ(rows.size(), 30u);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    // Strict while y_N is still resolvable below 1 in double precision.
    if (rows[i - 1]["y_N"].get<double>() < 1.0 - 1e-15) EXPECT_GT(rows[i]["y_N"].get<double>(), rows[i - 1]["y_N"].get<double>());
  }
  EXPECT_FALSE(j.contains("max_rel_dev"));
}

TEST(CliZn, BadInputs) {
  EXPECT_EQ(run({"zn", "--dim", "3", "--x", "0.5", "--n-max", "2"}).status, cli::kUsage);
  EXPECT_EQ(run({"zn", "--dim", "1", "--x", "1.0", "--n-max", "2"}).status, cli::kUsage);
  EXPECT_EQ(run({"zn", "--dim", "1", "--x", "0x1p-1", "--n-max", "2"}).status, cli::kUsage);
  EXPECT_EQ(run({"zn", "--dim", "1", "--x", "0.5", "--n-max", "0"}).status, cli::kUsage);
  EXPECT_EQ(run({"zn", "--dim", "1", "--x", "0.999999999", "--n-max", "3"}).status, cli::kNumeric);
}

TEST(CliGen, CountsAndBlocks) {
  EXPECT_EQ(run({"gen", "--n", "4"}).out, "13\n");
  EXPECT_EQ(run({"gen", "--n", "0"}).out, "1\n");
  EXPECT_EQ(run({"--jobs", "3", "gen", "--n", "12"}).out, run({"gen", "--n", "12"}).out);

  const auto r = run({"gen", "--n", "4", "--emit"});
  const auto ls = lines(r.out);
  EXPECT_EQ(ls.front(), "4");
  EXPECT_EQ(ls.back(), "total 13");
  // Blocks are separated by blank lines.
  int blocks = 0;
  bool in_block = false;
  for (std::size_t i = 0; i + 1 < ls.size(); ++i) {
    if (!ls[i].empty() && !in_block) ++blocks;
    in_block = !ls[i].empty();
  }
  EXPECT_EQ(blocks, 13);

  const auto j = json::parse(run({"--format", "json", "gen", "--n", "3", "--emit"}).out);
  EXPECT_EQ(j["count"], "6");
  EXPECT_EQ(j["partitions"][0], json::parse("[[3]]"));
  EXPECT_EQ(run({"gen", "--n", "31"}).status, cli::kResourceCeiling);
}

TEST(CliTable1, TableLayout) {
  const auto r = run({"table1"});
  ASSERT_EQ(r.status, 0);
  const auto ls = lines(r.out);
  ASSERT_EQ(ls.size(), 5u);
  EXPECT_EQ(words(ls[2]), (std::vector<std::string>{"15", "14", "6879", "6703", "6791", "7082", "7073", "1.3", "5.7", "5.5"}));
}

TEST(CliTable1, CsvAndJsonRoundTripToTableData) {
  const auto report = planepart::table1_report();
  const auto table = lines(run({"table1"}).out);
  const auto csv = lines(run({"--format", "csv", "table1"}).out);
  const auto j = json::parse(run({"--format", "json", "table1"}).out);
  ASSERT_EQ(csv.size(), 5u);
  ASSERT_EQ(j.size(), 4u);
  for (std::size_t i = 0; i < 4; ++i) {
    const auto t = words(table[i + 1]);
    const auto c = split(csv[i + 1], ',');
    // The first ten CSV columns are the table cells verbatim.
    EXPECT_EQ(std::vector<std::string>(c.begin(), c.begin() + 10), t);
    EXPECT_EQ(std::stod(c[10]), report[i].calc1);
    EXPECT_EQ(std::stod(c[11]), report[i].calc2);
    EXPECT_EQ(std::stod(c[12]), report[i].calc3);

    const auto& row = j[i];
    EXPECT_EQ(row["n"], report[i].n);
    EXPECT_EQ(row["max_parts"], report[i].max_parts);
    EXPECT_EQ(row["exact_restricted"], report[i].exact_restricted->to_string());
    EXPECT_EQ(row["p2d_exact"], report[i].p2d_exact->to_string());
    EXPECT_EQ(row["calc1"].get<double>(), report[i].calc1);
    EXPECT_EQ(row["calc2"].get<double>(), report[i].calc2);
    EXPECT_EQ(row["calc3"].get<double>(), report[i].calc3);
    EXPECT_EQ(row["rel_err1"].get<double>(), *report[i].rel_err1);
    EXPECT_EQ(row["rel_err3"].get<double>(), *report[i].rel_err3);
    EXPECT_EQ(std::to_string(planepart::round_count(row["calc2"].get<double>())), t[5]);
  }
}

TEST(Cli, HelpExitsZero) {
  EXPECT_EQ(run({"--help"}).status, 0);
  EXPECT_EQ(run({"zn", "--help"}).status, 0);
}

}  // namespace

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cli.hpp"
#include "strictrank/confspace.hpp"
#include "strictrank/consistency.hpp"
#include "strictrank/harness.hpp"
#include "strictrank/io.hpp"
#include "strictrank/phi.hpp"
#include "strictrank/projection.hpp"
#include "strictrank/ranking.hpp"

using namespace strictrank;
using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(const std::vector<std::string>& args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

json run_json(std::vector<std::string> args, const std::string& input = "") {
  args.insert(args.begin(), {"--output", "json"});
  const auto r = run(args, input);
  EXPECT_EQ(r.code, 0) << r.err;
  return json::parse(r.out);
}

const char* kThirdCounterexample = R"({"n":3,"upper":[2.718281828459045,1.2340980408667956e-4,0.01831563888873418]})";
const char* kOnes = R"({"n":3,"upper":[1,1,1]})";
const char* kCyclic = R"({"n":3,"upper":[2.718281828459045,0.36787944117144233,2.718281828459045]})";

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("strictrank_cli_test_" + name);
}

}  // namespace

TEST(Cli, CheckOnAllOnes) {
  const auto doc = run_json({"check"}, kOnes);
  EXPECT_EQ(doc["consistent"], true);
  EXPECT_EQ(doc["r_condition"], false);
  EXPECT_EQ(doc["admissible"], false);
  EXPECT_EQ(doc["max_triad_deviation"], 0.0);
}

TEST(Cli, CheckMatchesLibrary) {
  const auto doc = run_json({"check"}, kCyclic);
  const auto a = io::matrix_from_json(json::parse(kCyclic));
  EXPECT_EQ(doc["max_triad_deviation"].get<double>(), max_triad_deviation(a));
  EXPECT_EQ(doc["indicators"]["koczkodaj"].get<double>(), koczkodaj_index(a));
  EXPECT_EQ(doc["indicators"]["smooth"].get<double>(), smooth_index(a));
  EXPECT_EQ(doc["consistent"], false);
  EXPECT_EQ(doc["r_condition"], true);
  EXPECT_EQ(doc["admissible"], false);
}

TEST(Cli, TextOutputIsKeyValueLines) {
  const auto r = run({"check"}, kOnes);
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("consistent: true\n"), std::string::npos);
  EXPECT_NE(r.out.find("indicators.smooth: 0"), std::string::npos);
}

TEST(Cli, RankThirdCounterexample) {
  const auto doc = run_json({"rank"}, kThirdCounterexample);
  EXPECT_EQ(doc["order"], json({1, 0, 2}));
  EXPECT_TRUE(doc["weights"].is_null());
  EXPECT_EQ(doc["characteristic"], json({{0, 1, -1}, {-1, 0, -1}, {1, 1, 0}}));
}

TEST(Cli, RankConsistentCarriesWeights) {
  const auto doc = run_json({"rank"}, R"({"n":3,"entries":[[1,0.5,0.25],[2,1,0.5],[4,2,1]]})");
  EXPECT_EQ(doc["order"], json({0, 1, 2}));
  ASSERT_TRUE(doc["weights"].is_array());
  EXPECT_NEAR(doc["weights"][0].get<double>(), 1.0, 1e-12);
  EXPECT_NEAR(doc["weights"][2].get<double>(), 4.0, 1e-12);
}

TEST(Cli, RankNotAdmissibleIsDomainError) {
  const auto r = run({"--output", "json", "rank"}, kCyclic);
  EXPECT_EQ(r.code, 1);
  EXPECT_TRUE(json::parse(r.out)["order"].is_null());
  EXPECT_EQ(json::parse(r.err)["error"], "NotAdmissible");
}

TEST(Cli, ConsistencizeWithReport) {
  const auto doc = run_json({"consistencize", "--report"}, kThirdCounterexample);
  const auto a = io::matrix_from_json(json::parse(kThirdCounterexample));
  EXPECT_EQ(doc["matrix"], io::matrix_to_json(consistencize(a)));
  EXPECT_EQ(doc["report"], to_json(locus_change_report(a)));
  EXPECT_EQ(doc["report"]["locus_changed"], true);
}

TEST(Cli, ConsistencizeTextIsCsv) {
  const auto r = run({"consistencize"}, kCyclic);
  ASSERT_EQ(r.code, 0) << r.err;
  const auto b = io::matrix_from_csv(r.out);
  for (double x : b.upper()) EXPECT_NEAR(x, 1.0, 1e-15);
}

TEST(Cli, CsvInput) {
  const auto doc = run_json({"--format", "csv", "check"}, "1,2,4\n0.5,1,2\n0.25,0.5,1\n");
  EXPECT_EQ(doc["consistent"], true);
  EXPECT_EQ(doc["admissible"], true);
}

TEST(Cli, MinimizeMatchesLibraryAndWritesTrace) {
  const std::string input = R"({"n":3,"entries":[[1,2,2],[0.5,1,2],[0.5,0.5,1]]})";
  const auto trace = temp_file("trace.jsonl");
  const auto doc = run_json({"minimize", "--trace", trace.string()}, input);
  const auto t = minimize_phi(io::matrix_from_json(json::parse(input)));
  EXPECT_EQ(doc["summary"], summary_json(t));
  EXPECT_EQ(doc["matrix"], io::matrix_to_json(t.final));
  EXPECT_EQ(doc["summary"]["converged"], true);
  EXPECT_EQ(doc["r_condition"], true);
  std::ifstream lines(trace);
  std::string line;
  std::size_t count = 0;
  double previous = 1e300;
  while (std::getline(lines, line)) {
    const auto step = json::parse(line);
    EXPECT_LE(step["phi"].get<double>(), previous);
    previous = step["phi"].get<double>();
    ++count;
  }
  EXPECT_EQ(count, t.iterates.size());
  std::filesystem::remove(trace);
}

TEST(Cli, MinimizeOnTieIsDomainError) {
  const auto r = run({"--output", "json", "minimize"}, kOnes);
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(json::parse(r.err)["error"], "DomainError");
}

TEST(Cli, Loci) {
  const auto doc = run_json({"loci", "--n", "3"});
  EXPECT_EQ(doc["total"], 8);
  EXPECT_EQ(doc["admissible"], 6);
  EXPECT_EQ(run({"loci", "--n", "9"}).code, 1);
}

TEST(Cli, SimulateMatchesLibrary) {
  const auto doc = run_json({"simulate", "--trials", "500", "--seed", "3", "--workers", "2"});
  EXPECT_EQ(doc, harness::to_json(harness::instability_experiment(3, 500, 2.0, 3, 1)));
}

TEST(Cli, ConfspaceDemo) {
  const auto doc =
      run_json({"confspace-demo", "--epsilon", "0.1", "--epsilon", "0.01", "--samples", "2000"});
  std::vector<double> eps{0.1, 0.01};
  EXPECT_EQ(doc, confspace::to_json(confspace::collision_length_table(eps, 2000), 2000));
}

TEST(Cli, InputFileAndStdinAgree) {
  const auto path = temp_file("matrix.json");
  {
    std::ofstream f(path);
    f << kThirdCounterexample;
  }
  EXPECT_EQ(run_json({"--input", path.string(), "rank"}), run_json({"--input", "-", "rank"}, kThirdCounterexample));
  std::filesystem::remove(path);
}

TEST(Cli, ErrorsCarryLocation) {
  const auto r = run({"--output", "json", "check"}, R"({"n":3,"entries":[[1,2,4],[0.6,1,2],[0.25,0.5,1]]})");
  EXPECT_EQ(r.code, 1);
  const auto e = json::parse(r.err);
  EXPECT_EQ(e["error"], "NonReciprocal");
  EXPECT_EQ(e["row"], 0);
  EXPECT_EQ(e["col"], 1);
  const auto text = run({"check"}, "{broken");
  EXPECT_EQ(text.code, 1);
  EXPECT_NE(text.err.find("ParseError"), std::string::npos);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"--format", "xml", "check"}).code, 2);
  EXPECT_EQ(run({"check", "rank"}).code, 2);
  EXPECT_EQ(run({"--input", "/nonexistent/matrix.json", "check"}).code, 2);
  EXPECT_EQ(run({"minimize", "--max-iters", "0"}, kCyclic).code, 2);
}

TEST(Cli, ArgvOverload) {
  std::istringstream in;
  std::ostringstream out, err;
  const char* argv[] = {"strictrank", "--output", "json", "loci", "--n", "4"};
  EXPECT_EQ(cli::run(6, argv, in, out, err), 0);
  EXPECT_EQ(json::parse(out.str())["admissible"], 24);
}

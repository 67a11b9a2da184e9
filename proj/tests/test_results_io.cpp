#include <filesystem>
#include <fstream>
#include <unistd.h>

#include "critgraph/results_io.hpp"
#include "doctest.h"

using namespace critgraph;
namespace fs = std::filesystem;

namespace {

fs::path temp_file(const std::string& name) {
  return fs::temp_directory_path() / ("critgraph_" + std::to_string(::getpid()) + "_" + name);
}

std::string slurp(const fs::path& p) {
  std::ifstream is(p);
  return {std::istreambuf_iterator<char>(is), std::istreambuf_iterator<char>()};
}

VerdictReport sample_report() {
  ExperimentSpec s;
  s.kind = ExperimentKind::tail_c1;
  s.params = GraphParams::critical(10'000);
  s.scale = 2.0;
  s.trials = 500;
  s.master_seed = 42;
  return run_experiment(s);
}

void check_same(const VerdictReport& a, const VerdictReport& b) {
  CHECK(nlohmann::json(to_json(a.spec)) == to_json(b.spec));
  CHECK(a.pass == b.pass);
  REQUIRE(a.estimate.has_value() == b.estimate.has_value());
  CHECK(a.estimate->successes == b.estimate->successes);
  CHECK(a.estimate->ci_low == b.estimate->ci_low);
  CHECK(a.estimate->ci_high == b.estimate->ci_high);
  CHECK(a.bound->name == b.bound->name);
  CHECK(a.bound->value == b.bound->value);
  CHECK(a.bound->conditions.size() == b.bound->conditions.size());
  CHECK(a.checks.size() == b.checks.size());
  CHECK(a.manifest.params == b.manifest.params);
  CHECK(a.manifest.master_seed == b.manifest.master_seed);
  CHECK(a.manifest.version == b.manifest.version);
}

}  // namespace

TEST_CASE("format names") {
  CHECK(parse_result_format("jsonl") == ResultFormat::json_lines);
  CHECK(parse_result_format("csv") == ResultFormat::csv_summary);
  CHECK_THROWS_AS(parse_result_format("xml"), ParameterError);
}

TEST_CASE("empty report list") {
  const auto csv = temp_file("empty.csv");
  write_results({}, csv, ResultFormat::csv_summary);
  CHECK(slurp(csv) == "kind,n,p,lambda,threshold,trials,p_hat,ci_low,ci_high,bound_name,bound,pass\n");
  const auto jl = temp_file("empty.jsonl");
  write_results({}, jl, ResultFormat::json_lines);
  CHECK(slurp(jl).empty());
  CHECK(read_results_jsonl(jl).empty());
  fs::remove(csv);
  fs::remove(jl);
}

TEST_CASE("one report gives one CSV data row") {
  const auto r = sample_report();
  const auto csv = temp_file("one.csv");
  write_results({r}, csv, ResultFormat::csv_summary);
  const std::string text = slurp(csv);
  CHECK(std::count(text.begin(), text.end(), '\n') == 2);
  CHECK(text.find("\ntail_c1,10000,0.0001,,928,500,") != std::string::npos);
  // The bound name contains a comma and must be quoted.
  CHECK(text.find("\"min(easy_c1,exp_tail_c1)->easy_c1\"") != std::string::npos);
  CHECK(csv_row(r).size() == kCsvColumns.size());
  fs::remove(csv);
}

TEST_CASE("JSON-lines round trip") {
  auto a = sample_report();
  auto b = a;
  b.spec.kind = ExperimentKind::walk_identity;
  b.spec.params = GraphParams::window(1'000'000, -1.0);
  b.spec.identity = IdentityKind::drift_linear;
  b.checks.push_back({"extra", std::nullopt, std::nullopt, 1.5, 4.0, true, true, "note, with comma"});
  const auto path = temp_file("rt.jsonl");
  write_results({a, b}, path, ResultFormat::json_lines);
  const auto back = read_results_jsonl(path);
  REQUIRE(back.size() == 2);
  check_same(a, back[0]);
  check_same(b, back[1]);
  CHECK(back[1].spec.params.lambda == -1.0);
  CHECK(back[1].spec.params.p == b.spec.params.p);
  CHECK(back[1].checks.back().note == "note, with comma");
  CHECK(back[1].checks.back().statistic == 1.5);
  CHECK_FALSE(back[1].checks.back().estimate.has_value());
  fs::remove(path);
}

TEST_CASE("rerun gives identical content apart from wall time") {
  auto a = sample_report();
  auto b = sample_report();
  a.manifest.wall_seconds = b.manifest.wall_seconds = 0;
  CHECK(to_json(a).dump() == to_json(b).dump());
}

TEST_CASE("I/O errors name the path") {
  const fs::path bad = "/nonexistent-dir/out.csv";
  try {
    write_results({}, bad, ResultFormat::csv_summary);
    FAIL("expected an exception");
  } catch (const std::runtime_error& e) {
    CHECK(std::string(e.what()).find("/nonexistent-dir/out.csv") != std::string::npos);
  }
  const auto garbage = temp_file("garbage.jsonl");
  std::ofstream(garbage) << "{not json\n";
  CHECK_THROWS_AS(read_results_jsonl(garbage), std::runtime_error);
  fs::remove(garbage);
}

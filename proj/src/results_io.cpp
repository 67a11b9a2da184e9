#include "critgraph/results_io.hpp"

#include <fstream>
#include <sstream>

namespace critgraph {

using nlohmann::json;

namespace {

json bound_json(const BoundReport& b) {
  json conds = json::array();
  for (const auto& c : b.conditions) conds.push_back({{"text", c.text}, {"satisfied", c.satisfied}});
  return {{"name", b.name},   {"value", b.value},           {"raw_value", b.raw_value},
          {"valid", b.valid}, {"conditions", conds},        {"advisories", b.advisories}};
}

BoundReport bound_from(const json& j) {
  BoundReport b;
  b.name = j.at("name").get<std::string>();
  b.value = j.at("value").get<double>();
  b.raw_value = j.at("raw_value").get<double>();
  b.valid = j.at("valid").get<bool>();
  for (const auto& c : j.at("conditions")) {
    b.conditions.push_back({c.at("text").get<std::string>(), c.at("satisfied").get<bool>()});
  }
  b.advisories = j.at("advisories").get<std::vector<std::string>>();
  return b;
}

json estimate_json(const TailEstimate& e) {
  return {{"successes", e.successes}, {"trials", e.trials}, {"p_hat", e.p_hat},
          {"ci_low", e.ci_low},       {"ci_high", e.ci_high}};
}

TailEstimate estimate_from(const json& j) {
  TailEstimate e;
  e.successes = j.at("successes").get<std::uint64_t>();
  e.trials = j.at("trials").get<std::uint64_t>();
  e.p_hat = j.at("p_hat").get<double>();
  e.ci_low = j.at("ci_low").get<double>();
  e.ci_high = j.at("ci_high").get<double>();
  return e;
}

template <class T, class F>
json opt_json(const std::optional<T>& v, F&& f) {
  return v ? f(*v) : json(nullptr);
}

json check_json(const CheckResult& c) {
  return {{"name", c.name},
          {"estimate", opt_json(c.estimate, estimate_json)},
          {"bound", opt_json(c.bound, bound_json)},
          {"statistic", opt_json(c.statistic, [](double x) { return json(x); })},
          {"limit", opt_json(c.limit, [](double x) { return json(x); })},
          {"pass", c.pass},
          {"advisory", c.advisory},
          {"note", c.note}};
}

CheckResult check_from(const json& j) {
  CheckResult c;
  c.name = j.at("name").get<std::string>();
  if (!j.at("estimate").is_null()) c.estimate = estimate_from(j.at("estimate"));
  if (!j.at("bound").is_null()) c.bound = bound_from(j.at("bound"));
  if (!j.at("statistic").is_null()) c.statistic = j.at("statistic").get<double>();
  if (!j.at("limit").is_null()) c.limit = j.at("limit").get<double>();
  c.pass = j.at("pass").get<bool>();
  c.advisory = j.at("advisory").get<bool>();
  c.note = j.at("note").get<std::string>();
  return c;
}

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (const char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

}  // namespace

ResultFormat parse_result_format(const std::string& name) {
  if (name == "jsonl" || name == "json-lines" || name == "json") return ResultFormat::json_lines;
  if (name == "csv" || name == "csv-summary") return ResultFormat::csv_summary;
  throw ParameterError("unknown output format '" + name + "'");
}

json to_json(const ExperimentSpec& s) {
  return {{"kind", to_string(s.kind)},
          {"n", s.params.n},
          {"p", s.params.p},
          {"lambda", s.params.lambda ? json(*s.params.lambda) : json(nullptr)},
          {"scale", s.scale},
          {"threshold", event_threshold(s)},
          {"trials", s.trials},
          {"master_seed", s.master_seed},
          {"alpha", s.alpha},
          {"barrier", s.barrier},
          {"identity", to_string(s.identity)},
          {"tv_tolerance", s.tv_tolerance},
          {"step_budget", s.step_budget},
          {"threads", s.threads}};
}

ExperimentSpec spec_from_json(const json& j) {
  ExperimentSpec s;
  s.kind = parse_experiment_kind(j.at("kind").get<std::string>());
  s.params.n = j.at("n").get<std::int64_t>();
  s.params.p = j.at("p").get<double>();
  if (!j.at("lambda").is_null()) s.params.lambda = j.at("lambda").get<double>();
  s.scale = j.at("scale").get<double>();
  s.trials = j.at("trials").get<std::uint64_t>();
  s.master_seed = j.at("master_seed").get<std::uint64_t>();
  s.alpha = j.at("alpha").get<double>();
  s.barrier = j.at("barrier").get<std::int64_t>();
  s.identity = parse_identity_kind(j.at("identity").get<std::string>());
  s.tv_tolerance = j.at("tv_tolerance").get<double>();
  s.step_budget = j.at("step_budget").get<double>();
  s.threads = j.at("threads").get<int>();
  return s;
}

json to_json(const VerdictReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) checks.push_back(check_json(c));
  return {{"spec", to_json(r.spec)},
          {"estimate", opt_json(r.estimate, estimate_json)},
          {"bound", opt_json(r.bound, bound_json)},
          {"pass", r.pass},
          {"checks", checks},
          {"manifest",
           {{"master_seed", r.manifest.master_seed},
            {"params", r.manifest.params},
            {"version", r.manifest.version},
            {"threads", r.manifest.threads},
            {"wall_seconds", r.manifest.wall_seconds}}}};
}

VerdictReport report_from_json(const json& j) {
  VerdictReport r;
  r.spec = spec_from_json(j.at("spec"));
  if (!j.at("estimate").is_null()) r.estimate = estimate_from(j.at("estimate"));
  if (!j.at("bound").is_null()) r.bound = bound_from(j.at("bound"));
  r.pass = j.at("pass").get<bool>();
  for (const auto& c : j.at("checks")) r.checks.push_back(check_from(c));
  const json& m = j.at("manifest");
  r.manifest.master_seed = m.at("master_seed").get<std::uint64_t>();
  r.manifest.params = m.at("params").get<std::string>();
  r.manifest.version = m.at("version").get<std::string>();
  r.manifest.threads = m.at("threads").get<int>();
  r.manifest.wall_seconds = m.at("wall_seconds").get<double>();
  return r;
}

const std::vector<std::string> kCsvColumns = {"kind",   "n",      "p",       "lambda",
                                              "threshold", "trials", "p_hat", "ci_low",
                                              "ci_high", "bound_name", "bound", "pass"};

std::vector<std::string> csv_row(const VerdictReport& r) {
  const ExperimentSpec& s = r.spec;
  std::vector<std::string> row{to_string(s.kind),
                               std::to_string(s.params.n),
                               fmt(s.params.p),
                               s.params.lambda ? fmt(*s.params.lambda) : "",
                               std::to_string(event_threshold(s)),
                               std::to_string(s.trials)};
  if (r.estimate) {
    row.push_back(fmt(r.estimate->p_hat));
    row.push_back(fmt(r.estimate->ci_low));
    row.push_back(fmt(r.estimate->ci_high));
  } else {
    row.insert(row.end(), {"", "", ""});
  }
  if (r.bound) {
    row.push_back(r.bound->name);
    row.push_back(fmt(r.bound->value));
  } else {
    row.insert(row.end(), {"", ""});
  }
  row.push_back(r.pass ? "true" : "false");
  return row;
}

void write_results(const std::vector<VerdictReport>& reports, const std::filesystem::path& path,
                   ResultFormat format) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  if (format == ResultFormat::json_lines) {
    for (const auto& r : reports) os << to_json(r).dump() << '\n';
  } else {
    auto line = [&](const std::vector<std::string>& cells) {
      for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << csv_escape(cells[i]);
      os << '\n';
    };
    line(kCsvColumns);
    for (const auto& r : reports) line(csv_row(r));
  }
  os.flush();
  if (!os) throw std::runtime_error("write failed for '" + path.string() + "'");
}

std::vector<VerdictReport> read_results_jsonl(const std::filesystem::path& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot open '" + path.string() + "' for reading");
  std::vector<VerdictReport> out;
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    try {
      out.push_back(report_from_json(json::parse(line)));
    } catch (const json::exception& e) {
      throw std::runtime_error("'" + path.string() + "': " + e.what());
    }
  }
  return out;
}

}  // namespace critgraph

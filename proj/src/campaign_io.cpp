#include "opineq/campaign_io.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "opineq/matrix_io.hpp"

namespace opineq {

using nlohmann::json;
using ordered = nlohmann::ordered_json;

namespace {

ordered num(double v) {
  if (std::isfinite(v)) return v;
  return format_double(v);
}

template <class J>
double read_num(const J& j, const char* what) {
  if (j.is_number()) return j.template get<double>();
  if (j.is_string()) {
    const std::string s = j.template get<std::string>();
    if (s == "inf") return std::numeric_limits<double>::infinity();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
    if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
  }
  raise(ErrorKind::BadConfig, std::string("expected a number for ") + what);
}

SchattenP read_order(const json& j) {
  if (j.is_string()) return parse_schatten_p(j.get<std::string>());
  if (j.is_number()) return SchattenP(j.get<double>());
  raise(ErrorKind::BadConfig, "p_grid entries must be numbers or \"inf\"");
}

ordered params_json(const Params& params) {
  ordered o = ordered::object();
  for (const auto& [k, v] : params) o[k] = v;
  return o;
}

ordered report_json(const BoundReport& r) {
  ordered o;
  o["check_id"] = r.check_id;
  o["relation"] = to_string(r.relation);
  o["lhs"] = num(r.lhs);
  o["rhs"] = num(r.rhs);
  o["slack"] = num(r.slack);
  o["holds"] = r.holds;
  o["indeterminate"] = r.indeterminate;
  o["params"] = params_json(r.params);
  o["input_digest"] = digest_hex(r.input_digest);
  return o;
}

ordered config_json(const CampaignConfig& c) {
  ordered o;
  o["seed"] = c.seed;
  o["trials_per_check"] = c.trials_per_check;
  o["dims"] = c.dims;
  ordered pg = ordered::array();
  for (const SchattenP& p : c.p_grid) {
    if (p.is_inf()) {
      pg.push_back("inf");
    } else {
      pg.push_back(p.finite());
    }
  }
  o["p_grid"] = pg;
  ordered at = ordered::array();
  for (const auto& [a, t] : c.alpha_t_grid) at.push_back({a, t});
  o["alpha_t_grid"] = at;
  o["tol_rel"] = c.tol_rel;
  o["output_path"] = c.output_path;
  o["families"] = c.families;
  o["max_counterexamples"] = c.max_counterexamples;
  return o;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

CampaignConfig parse_config_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    raise(ErrorKind::ParseError, std::string("config json: ") + e.what());
  }
  if (!j.is_object()) raise(ErrorKind::BadConfig, "config must be a JSON object");
  CampaignConfig c;
  try {
    if (j.contains("seed")) c.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("trials_per_check")) c.trials_per_check = j.at("trials_per_check").get<int>();
    if (j.contains("dims")) c.dims = j.at("dims").get<std::vector<int>>();
    if (j.contains("p_grid")) {
      c.p_grid.clear();
      for (const json& p : j.at("p_grid")) c.p_grid.push_back(read_order(p));
    }
    if (j.contains("alpha_t_grid")) {
      c.alpha_t_grid.clear();
      for (const json& at : j.at("alpha_t_grid")) {
        if (!at.is_array() || at.size() != 2) raise(ErrorKind::BadConfig, "alpha_t_grid entries must be [alpha, t]");
        c.alpha_t_grid.emplace_back(read_num(at[0], "alpha"), read_num(at[1], "t"));
      }
    }
    if (j.contains("tol_rel")) c.tol_rel = read_num(j.at("tol_rel"), "tol_rel");
    if (j.contains("output_path")) c.output_path = j.at("output_path").get<std::string>();
    if (j.contains("families")) c.families = j.at("families").get<std::vector<std::string>>();
    if (j.contains("max_counterexamples")) c.max_counterexamples = j.at("max_counterexamples").get<int>();
  } catch (const json::exception& e) {
    raise(ErrorKind::BadConfig, std::string("config json: ") + e.what());
  }
  c.validate();
  return c;
}

CampaignConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) raise(ErrorKind::IoError, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config_json(ss.str());
}

std::string config_to_json(const CampaignConfig& config) { return config_json(config).dump(2); }

std::string report_to_json(const BoundReport& r) { return report_json(r).dump(); }

std::string result_to_json(const CampaignResult& result, bool include_timing) {
  ordered o;
  o["schema_version"] = kSchemaVersion;
  o["config"] = config_json(result.config);
  o["total_reports"] = result.total_reports;
  o["failures"] = result.failures;
  o["indeterminate"] = result.indeterminate;
  o["errors"] = result.errors;
  o["all_hold"] = result.all_hold();
  ordered aggs = ordered::array();
  for (const CheckAggregate& a : result.aggregates) {
    ordered x;
    x["check_id"] = a.check_id;
    x["family"] = a.family;
    x["evaluated"] = a.evaluated;
    x["pass"] = a.pass;
    x["fail"] = a.fail;
    x["indeterminate"] = a.indeterminate;
    x["min_slack"] = num(a.min_slack);
    x["max_rel_violation"] = num(a.max_rel_violation);
    aggs.push_back(std::move(x));
  }
  o["checks"] = std::move(aggs);
  ordered cxs = ordered::array();
  for (const Counterexample& cx : result.counterexamples) {
    ordered x;
    x["family"] = cx.family;
    x["check_id"] = cx.check_id;
    x["dim"] = cx.dim;
    x["trial"] = cx.trial;
    x["trial_seed"] = cx.trial_seed;
    x["input_kind"] = cx.inputs.kind;
    if (cx.report) x["report"] = report_json(*cx.report);
    if (!cx.error.empty()) x["error"] = cx.error;
    ordered inputs = ordered::object();
    for (const auto& [name, m] : cx.inputs.matrices) inputs[name] = format_matrix(m);
    x["inputs"] = std::move(inputs);
    cxs.push_back(std::move(x));
  }
  o["counterexamples"] = std::move(cxs);
  if (include_timing) o["wall_seconds"] = result.wall_seconds;
  return o.dump(2) + "\n";
}

std::string summary_csv(const CampaignResult& result) {
  std::ostringstream os;
  os << "# schema_version=" << kSchemaVersion << "\n";
  os << "check_id,family,evaluated,pass,fail,indeterminate,min_slack,max_rel_violation\n";
  for (const CheckAggregate& a : result.aggregates) {
    os << csv_field(a.check_id) << ',' << csv_field(a.family) << ',' << a.evaluated << ',' << a.pass << ','
       << a.fail << ',' << a.indeterminate << ',' << format_double(a.min_slack) << ','
       << format_double(a.max_rel_violation) << "\n";
  }
  return os.str();
}

std::vector<Counterexample> parse_counterexamples(const std::string& result_json) {
  std::vector<Counterexample> out;
  ordered j;
  try {
    j = ordered::parse(result_json);
    for (const ordered& x : j.at("counterexamples")) {
      Counterexample cx;
      cx.family = x.at("family").get<std::string>();
      cx.check_id = x.at("check_id").get<std::string>();
      cx.dim = x.at("dim").get<int>();
      cx.trial = x.at("trial").get<int>();
      cx.trial_seed = x.at("trial_seed").get<std::uint64_t>();
      cx.inputs.kind = x.value("input_kind", "");
      for (const auto& [name, text] : x.at("inputs").items()) {
        cx.inputs.put(name, parse_matrix(text.get<std::string>()));
      }
      if (x.contains("report")) {
        const ordered& r = x.at("report");
        BoundReport br;
        br.check_id = r.at("check_id").get<std::string>();
        br.relation = parse_relation(r.at("relation").get<std::string>());
        br.lhs = read_num(r.at("lhs"), "lhs");
        br.rhs = read_num(r.at("rhs"), "rhs");
        br.slack = read_num(r.at("slack"), "slack");
        br.holds = r.at("holds").get<bool>();
        br.indeterminate = r.at("indeterminate").get<bool>();
        for (const auto& [k, v] : r.at("params").items()) br.params.emplace_back(k, v.get<std::string>());
        cx.report = br;
      }
      if (x.contains("error")) cx.error = x.at("error").get<std::string>();
      out.push_back(std::move(cx));
    }
  } catch (const ordered::exception& e) {
    raise(ErrorKind::ParseError, std::string("result json: ") + e.what());
  }
  return out;
}

void write_campaign_outputs(const CampaignResult& result, const std::string& output_path) {
  namespace fs = std::filesystem;
  const fs::path json_path(output_path);
  if (json_path.has_parent_path()) {
    std::error_code ec;
    fs::create_directories(json_path.parent_path(), ec);
  }
  fs::path csv_path = json_path;
  csv_path.replace_extension(".csv");
  std::ofstream js(json_path);
  if (!js) raise(ErrorKind::IoError, "cannot write " + json_path.string());
  js << result_to_json(result, true);
  std::ofstream cs(csv_path);
  if (!cs) raise(ErrorKind::IoError, "cannot write " + csv_path.string());
  cs << summary_csv(result);
  if (!js || !cs) raise(ErrorKind::IoError, "write failed for " + output_path);
}

}  // namespace opineq

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "opineq/apps.hpp"
#include "opineq/campaign_io.hpp"
#include "opineq/ineq.hpp"
#include "opineq/matrix_io.hpp"
#include "opineq/selfcheck.hpp"

namespace {

constexpr int kExitHolds = 0;
constexpr int kExitCounterexample = 1;
constexpr int kExitUsage = 2;

using namespace opineq;

std::string fmt(double v) {
  std::ostringstream os;
  os << std::setprecision(12) << v;
  return os.str();
}

void print_report(const BoundReport& r) {
  std::cout << std::left << std::setw(22) << r.check_id << " lhs " << std::setw(18) << fmt(r.lhs) << " rhs "
            << std::setw(18) << fmt(r.rhs) << " slack " << std::setw(18) << fmt(r.slack)
            << (r.holds ? "holds" : "VIOLATED") << "\n";
}

int cmd_verify(const std::string& config_path, const std::string& output, bool serial) {
  CampaignConfig cfg = load_config_file(config_path);
  if (!output.empty()) cfg.output_path = output;
  const CampaignResult res = run_campaign(cfg, serial ? ExecutionPolicy::Serial : ExecutionPolicy::Parallel);
  if (!cfg.output_path.empty()) write_campaign_outputs(res, cfg.output_path);
  std::cout << "reports " << res.total_reports << ", failures " << res.failures << ", indeterminate "
            << res.indeterminate << ", errors " << res.errors << ", wall " << fmt(res.wall_seconds) << " s\n";
  for (const CheckAggregate& a : res.aggregates) {
    if (a.fail > 0) {
      std::cout << "FAIL " << a.check_id << " (" << a.fail << " of " << a.evaluated << ")\n";
    }
  }
  if (!cfg.output_path.empty()) std::cout << "wrote " << cfg.output_path << "\n";
  return res.all_hold() ? kExitHolds : kExitCounterexample;
}

int cmd_wbound(const std::string& path, double alpha, double t) {
  const ComplexMatrix a = read_matrix_file(path);
  const RadiusEstimate w = numerical_radius(a);
  std::cout << "w(A)       " << fmt(w.value) << "  (certified error " << fmt(w.certified_error) << ", "
            << w.evaluations << " evaluations)\n";
  std::cout << "||A||      " << fmt(operator_norm(a)) << "\n";
  std::cout << "r(A)       " << fmt(spectral_radius(a)) << "\n";
  bool ok = true;
  for (const BoundReport& r : check_numrad_bounds(a, alpha, t)) {
    print_report(r);
    ok = ok && r.holds;
  }
  return ok ? kExitHolds : kExitCounterexample;
}

int cmd_polyzeros(const std::string& coeffs) {
  std::string text = coeffs;
  if (std::filesystem::is_regular_file(coeffs)) {
    std::ifstream in(coeffs);
    std::stringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  const Polynomial poly = parse_polynomial_json(text);
  const ZeroSumBound z = zero_sum_bound(poly);
  double smallest = INFINITY;
  for (const Complex& l : z.zeros) smallest = std::min(smallest, std::abs(l));
  const double sb = smallest_zero_bound(poly);
  std::cout << "degree              " << poly.degree() << "\n";
  std::cout << "zero_sum            " << fmt(z.zero_sum) << "\n";
  std::cout << "bound               " << fmt(z.bound) << "\n";
  std::cout << "smallest_zero       " << fmt(smallest) << "\n";
  std::cout << "smallest_zero_bound " << fmt(sb) << "\n";
  std::cout << "zeros\n";
  for (const Complex& l : z.zeros) std::cout << "  " << fmt(l.real()) << " " << fmt(l.imag()) << "\n";
  const double tau = kDefaultTolRel * std::max(1.0, z.bound);
  return z.zero_sum <= z.bound + tau && smallest <= sb + tau ? kExitHolds : kExitCounterexample;
}

int cmd_graph_energy(const std::string& path) {
  const EnergyReport r = energy_report(load_graph_file(path));
  std::cout << "n                " << r.n << "\n";
  std::cout << "m                " << r.m << "\n";
  std::cout << "rank             " << r.rank << "\n";
  std::cout << "energy           " << fmt(r.energy) << "\n";
  std::cout << "bound_rank       " << fmt(r.bound_rank) << "\n";
  std::cout << "bound_mcclelland " << fmt(r.bound_mcclelland) << "\n";
  std::cout << "eigenvalues     ";
  for (double e : r.eigenvalues) std::cout << " " << fmt(e);
  std::cout << "\n";
  const double tau = kDefaultTolRel * std::max(1.0, r.bound_mcclelland);
  return r.energy <= r.bound_rank + tau && r.bound_rank <= r.bound_mcclelland + tau ? kExitHolds
                                                                                   : kExitCounterexample;
}

int cmd_selfcheck() {
  int failed = 0;
  const auto items = run_selfcheck();
  for (const SelfCheckItem& it : items) {
    std::cout << (it.passed ? "PASS " : "FAIL ") << it.name;
    if (!it.passed && !it.detail.empty()) std::cout << "  [" << it.detail << "]";
    std::cout << "\n";
    failed += it.passed ? 0 : 1;
  }
  std::cout << items.size() - failed << "/" << items.size() << " anchors pass\n";
  return failed == 0 ? kExitHolds : kExitCounterexample;
}

int cmd_checks(const std::string& out) {
  const std::string md = catalog_markdown();
  if (out.empty() || out == "-") {
    std::cout << md;
    return kExitHolds;
  }
  std::ofstream f(out);
  if (!f) raise(ErrorKind::IoError, "cannot write " + out);
  f << md;
  return kExitHolds;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Operator inequality verification and applications"};
  app.require_subcommand(1);

  std::string config_path, output;
  bool serial = false;
  auto* verify = app.add_subcommand("verify", "run a randomized verification campaign");
  verify->add_option("--config", config_path, "campaign config JSON")->required()->check(CLI::ExistingFile);
  verify->add_option("--output", output, "override output_path from the config");
  verify->add_flag("--serial", serial, "run trials on one thread");

  std::string matrix_path;
  double alpha = 0.5, t = 0.5;
  auto* wbound = app.add_subcommand("wbound", "numerical radius of a matrix and its upper bounds");
  wbound->add_option("--matrix", matrix_path, "matrix text file")->required()->check(CLI::ExistingFile);
  wbound->add_option("--alpha", alpha, "power-pair exponent")->check(CLI::Range(0.0, 1.0));
  wbound->add_option("--t", t, "second exponent")->check(CLI::Range(0.0, 1.0));

  std::string coeffs;
  auto* poly = app.add_subcommand("polyzeros", "zero-sum bound for a monic polynomial");
  poly->add_option("--coeffs", coeffs, "JSON [[re, im], ...] ordered a_1..a_n, or a file holding it")->required();

  std::string edges;
  auto* graph = app.add_subcommand("graph-energy", "graph energy and its rank bound");
  graph->add_option("--edges", edges, "edge-list file")->required()->check(CLI::ExistingFile);

  auto* selfcheck = app.add_subcommand("selfcheck", "run the fixed anchor suite");

  std::string catalog_out = "-";
  auto* checks = app.add_subcommand("checks", "print the check catalog as markdown");
  checks->add_option("--output", catalog_out, "file to write, - for stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*verify) return cmd_verify(config_path, output, serial);
    if (*wbound) return cmd_wbound(matrix_path, alpha, t);
    if (*poly) return cmd_polyzeros(coeffs);
    if (*graph) return cmd_graph_energy(edges);
    if (*selfcheck) return cmd_selfcheck();
    if (*checks) return cmd_checks(catalog_out);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

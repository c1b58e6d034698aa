// langnet: command-line front end for the coevolving language network model.
//
//   langnet simulate --n 100 --k 4 --f 3 --q 2 --strategy local-uniform --seed 7 --out runs/
//   langnet sweep --plan plan.txt --workers 4 --out sweep/
//   langnet metrics --edges run.edges --states run.states.csv
//   langnet empirical --input countries.csv --bin-width 10000000 --out-prefix out/languages
//
// Exit codes: 0 success, 1 runtime failure, 2 usage error.

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "langnet/empirical.hpp"
#include "langnet/errors.hpp"
#include "langnet/experiments.hpp"
#include "langnet/graph.hpp"
#include "langnet/metrics.hpp"
#include "langnet/model.hpp"
#include "langnet/text_io.hpp"

namespace fs = std::filesystem;
using namespace langnet;

namespace {

constexpr int kExitRuntime = 1;
constexpr int kExitUsage = 2;

/// Thrown for bad flags or unreadable inputs discovered after parsing.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void ensure_dir(const std::string& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw std::runtime_error("cannot create directory '" + dir + "': " + ec.message());
}

std::string read_input(const std::string& path, std::string_view what) {
  if (!fs::is_regular_file(path)) throw UsageError(std::string(what) + " '" + path + "' not found");
  return text::read_file(path);
}

struct SimulateArgs {
  std::size_t n = 0;
  double k = 4.0;
  std::size_t f = 3;
  std::uint64_t q = 0;
  std::string strategy = "local-uniform";
  std::optional<std::uint64_t> seed;
  std::uint64_t max_steps = 0;
  std::uint64_t window = 0;
  std::string out = ".";
  std::string prefix = "run";
};

int do_simulate(const SimulateArgs& a) {
  if (!a.seed) throw UsageError("--seed is required");
  if (a.q < 1 || a.q > 0xffffffffULL) throw UsageError("--q must be in 1..4294967295");
  ModelConfig cfg;
  cfg.n = a.n;
  cfg.avg_degree = a.k;
  cfg.f = a.f;
  cfg.q = static_cast<Trait>(a.q);
  cfg.max_steps = a.max_steps;
  cfg.quiescence_window = a.window;
  cfg.seed = *a.seed;
  try {
    cfg.strategy = parse_strategy(a.strategy);
    cfg.validate();
  } catch (const ParameterError& e) {
    throw UsageError(e.what());
  }

  const RunResult result = run(cfg);
  MetricsReport report = measure(result);

  ensure_dir(a.out);
  const fs::path base = fs::path(a.out) / a.prefix;
  text::write_file(base.string() + ".manifest", format_manifest(cfg, result));
  text::write_file(base.string() + ".edges", format_edge_list(result.graph));
  text::write_file(base.string() + ".states.csv", format_states_csv(result.states));
  text::write_file(base.string() + ".metrics.csv",
                   std::string(kMetricsHeader) + "\n" + format_metrics_row(report) + "\n");
  std::cout << "stop_reason=" << to_string(result.stop_reason) << " steps=" << result.steps
            << " domains=" << report.domain_report.count << " components=" << report.component_report.count
            << "\n";
  return 0;
}

int do_sweep(const std::string& plan_path, unsigned workers, const std::string& out) {
  SweepPlan plan;
  try {
    plan = parse_plan(read_input(plan_path, "plan file"));
  } catch (const ParameterError& e) {
    throw UsageError(std::string("plan: ") + e.what());
  } catch (const DataError& e) {
    throw UsageError(e.what());
  }
  const SweepResult result = sweep(plan, workers);
  ensure_dir(out);
  text::write_file((fs::path(out) / "realizations.csv").string(), format_realizations_csv(result.realizations));
  text::write_file((fs::path(out) / "aggregate.csv").string(), format_aggregate_csv(result.rows));
  std::cout << result.realizations.size() << " realizations, " << result.rows.size() << " aggregate rows\n";
  return 0;
}

int do_metrics(const std::string& edges_path, const std::string& states_path, bool header) {
  const std::string edges_text = read_input(edges_path, "edges file");
  const std::string states_text = read_input(states_path, "states file");
  const StateMatrix states = parse_states_csv(states_text);
  const std::size_t needed = edge_list_min_nodes(edges_text);
  if (needed > states.rows()) {
    throw DataError("edge list references node " + std::to_string(needed - 1) + " but the states file has only " +
                    std::to_string(states.rows()) + " rows");
  }
  const Graph g = parse_edge_list(edges_text, states.rows());
  if (header) std::cout << kMetricsHeader << "\n";
  std::cout << format_metrics_row(measure(g, states)) << "\n";
  return 0;
}

struct EmpiricalArgs {
  std::string input;
  std::uint64_t bin_width = 10'000'000;
  std::optional<double> log_base;
  std::optional<std::string> exclude_file;
  std::string out_prefix = "empirical";
};

int do_empirical(const EmpiricalArgs& a) {
  if (a.bin_width == 0) throw UsageError("--bin-width must be positive");
  if (a.log_base && !(*a.log_base > 1.0)) throw UsageError("--log-base must be > 1");
  const std::string content = read_input(a.input, "input");
  std::vector<std::string> names = empirical::default_exclusions();
  if (a.exclude_file) names = empirical::parse_name_list(read_input(*a.exclude_file, "exclude file"));

  const auto records = empirical::parse_countries(content);
  auto [kept, warnings] = empirical::exclude(records, names);
  for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";
  const auto bins = a.log_base ? empirical::log_bin_average(kept, *a.log_base)
                               : empirical::bin_average(kept, a.bin_width);

  const fs::path prefix(a.out_prefix);
  if (prefix.has_parent_path()) ensure_dir(prefix.parent_path().string());
  text::write_file(a.out_prefix + "_scatter.csv", empirical::format_scatter_csv(kept));
  text::write_file(a.out_prefix + "_bins.csv", empirical::format_bins_csv(bins));
  std::cout << kept.size() << " countries, " << bins.size() << " bins\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coevolving language network simulations and empirical language-count aggregation"};
  app.require_subcommand(1);

  SimulateArgs sim;
  auto* simulate = app.add_subcommand("simulate", "Run one realization and dump its final state");
  simulate->add_option("--n", sim.n, "Number of nodes")->required();
  simulate->add_option("--k", sim.k, "Average degree <k>")->capture_default_str();
  simulate->add_option("--f", sim.f, "Traits per node")->capture_default_str();
  simulate->add_option("--q", sim.q, "Values per trait")->required();
  simulate->add_option("--strategy", sim.strategy,
                       "local-uniform | local-preferential | global-uniform | static-lattice")
      ->capture_default_str();
  simulate->add_option("--seed", sim.seed, "RNG seed (required)");
  simulate->add_option("--max-steps", sim.max_steps, "Step budget (0 = 50000 N)")->capture_default_str();
  simulate->add_option("--window", sim.window, "Stall window in steps (0 = 10 N F)")->capture_default_str();
  simulate->add_option("--out", sim.out, "Output directory")->capture_default_str();
  simulate->add_option("--prefix", sim.prefix, "Output file prefix")->capture_default_str();

  std::string plan_path;
  unsigned workers = 0;
  std::string sweep_out = ".";
  auto* sweep_cmd = app.add_subcommand("sweep", "Run an ensemble sweep from a plan file");
  sweep_cmd->add_option("--plan", plan_path, "Plan file (key = value)")->required();
  sweep_cmd->add_option("--workers", workers, "Worker threads (0 = all cores)")->capture_default_str();
  sweep_cmd->add_option("--out", sweep_out, "Output directory")->capture_default_str();

  std::string edges_path, states_path;
  bool header = false;
  auto* metrics_cmd = app.add_subcommand("metrics", "Print one metrics CSV row for a dumped state");
  metrics_cmd->add_option("--edges", edges_path, "Edge list file")->required();
  metrics_cmd->add_option("--states", states_path, "States CSV file")->required();
  metrics_cmd->add_flag("--header", header, "Print the column header first");

  EmpiricalArgs emp;
  auto* empirical_cmd = app.add_subcommand("empirical", "Bin languages-per-country data by population");
  empirical_cmd->add_option("--input", emp.input, "country,population,languages CSV")->required();
  empirical_cmd->add_option("--bin-width", emp.bin_width, "Linear bin width in persons")->capture_default_str();
  empirical_cmd->add_option("--log-base", emp.log_base, "Use geometric bins with this base instead");
  empirical_cmd->add_option("--exclude-file", emp.exclude_file,
                            "Country names to drop, one per line (default: China, India, Indonesia, "
                            "Papua New Guinea)");
  empirical_cmd->add_option("--out-prefix", emp.out_prefix, "Writes <prefix>_scatter.csv and <prefix>_bins.csv")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*simulate) return do_simulate(sim);
    if (*sweep_cmd) return do_sweep(plan_path, workers, sweep_out);
    if (*metrics_cmd) return do_metrics(edges_path, states_path, header);
    if (*empirical_cmd) return do_empirical(emp);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRuntime;
  }
  return kExitUsage;
}

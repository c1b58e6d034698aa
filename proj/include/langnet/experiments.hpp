#ifndef LANGNET_EXPERIMENTS_HPP
#define LANGNET_EXPERIMENTS_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "langnet/metrics.hpp"
#include "langnet/model.hpp"

namespace langnet {

/// One finished realization together with the configuration that produced it.
struct Realization {
  ModelConfig config;  // config.seed is the realization seed
  MetricsReport metrics;
};

/// Runs one realization per seed, in parallel on up to `workers` threads
/// (0 = hardware concurrency). Output order follows `seeds`; results do not
/// depend on scheduling. A failing realization aborts with its seed in the message.
std::vector<Realization> run_realizations(const ModelConfig& cfg,
                                          std::span<const std::uint64_t> seeds,
                                          unsigned workers = 0);

/// r realizations with seeds seed_base + 0 .. r-1.
std::vector<MetricsReport> run_ensemble(const ModelConfig& cfg, std::size_t r,
                                        std::uint64_t seed_base, unsigned workers = 0);

struct SweepPlan {
  ModelConfig base;
  std::vector<std::size_t> n_values;
  std::vector<Trait> q_values;
  std::vector<Strategy> strategies;
  std::size_t realizations = 100;
  std::uint64_t seed_base = 0;

  void validate() const;
  /// Every (strategy, n, q) point in that nesting order.
  std::vector<ModelConfig> points() const;
};

/// Parses the flat key=value plan format. Throws ParameterError.
///
///   n = 100,200,400,800      (required)
///   q = 2,5                  (required)
///   strategy = local-uniform,global-uniform   (required)
///   f = 3                    avg_degree = 4
///   realizations = 100       seed_base = 1
///   max_steps = 0            quiescence_window = 0
///
/// '#' starts a comment; blank lines are ignored.
SweepPlan parse_plan(const std::string& content);

/// Seed of realization `index` at a parameter point: seed_base XOR a SplitMix64
/// hash of (N, q, F, <k>, strategy, index). Points are keyed by value, so adding
/// points to a plan leaves existing seeds unchanged.
std::uint64_t realization_seed(std::uint64_t seed_base, const ModelConfig& point,
                               std::size_t index);

struct EnsembleRow {
  std::size_t n = 0;
  Trait q = 0;
  std::size_t f = 0;
  double avg_degree = 0.0;
  Strategy strategy = Strategy::LocalUniform;
  std::string observable;
  double mean = 0.0;
  double stderr_ = 0.0;  // sample std / sqrt(r); 0 when r = 1
  std::size_t r = 0;
};

/// Observables per realization, in emitted order.
std::vector<std::pair<std::string, std::optional<double>>> observables(const MetricsReport& m);

/// Aggregates realizations that share one parameter point.
std::vector<EnsembleRow> aggregate(const ModelConfig& point, std::span<const Realization> runs);

struct SweepResult {
  std::vector<Realization> realizations;
  std::vector<EnsembleRow> rows;
};

SweepResult sweep(const SweepPlan& plan, unsigned workers = 0);

inline constexpr const char* kRealizationHeader =
    "n,q,f,avg_degree,strategy,seed,components,largest_component,domains,largest_domain,"
    "C,mean_c,avg_path,steps,stop_reason";
inline constexpr const char* kAggregateHeader =
    "n,q,f,avg_degree,strategy,observable,mean,stderr,r";

std::string format_realizations_csv(std::span<const Realization> runs);
std::string format_aggregate_csv(std::span<const EnsembleRow> rows);

struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
};

/// Ordinary least squares. Throws ParameterError unless at least two distinct x exist.
/// r^2 is 1 when all y are equal (the fit is exact).
LinearFit linear_fit(std::span<const std::pair<double, double>> points);

struct Summary {
  double mean = 0.0;
  double stderr_ = 0.0;
  std::size_t count = 0;
};

Summary summarize(std::span<const double> values);

}  // namespace langnet

#endif  // LANGNET_EXPERIMENTS_HPP

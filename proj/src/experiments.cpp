#include "langnet/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <exception>
#include <thread>

#include "langnet/errors.hpp"
#include "langnet/rng.hpp"
#include "langnet/text_io.hpp"

namespace langnet {

std::vector<Realization> run_realizations(const ModelConfig& cfg,
                                          std::span<const std::uint64_t> seeds,
                                          unsigned workers) {
  cfg.validate();
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(1, seeds.size())));

  std::vector<Realization> out(seeds.size());
  std::vector<std::exception_ptr> errors(seeds.size());
  std::atomic<std::size_t> next{0};

  auto work = [&] {
    for (std::size_t k = next++; k < seeds.size(); k = next++) {
      try {
        ModelConfig c = cfg;
        c.seed = seeds[k];
        out[k] = Realization{c, measure(run(c))};
      } catch (...) {
        errors[k] = std::current_exception();
      }
    }
  };

  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }

  for (std::size_t k = 0; k < seeds.size(); ++k) {
    if (!errors[k]) continue;
    std::string what = "unknown error";
    try {
      std::rethrow_exception(errors[k]);
    } catch (const std::exception& e) {
      what = e.what();
    } catch (...) {
    }
    throw std::runtime_error("realization with seed " + std::to_string(seeds[k]) + " failed: " + what);
  }
  return out;
}

std::vector<MetricsReport> run_ensemble(const ModelConfig& cfg, std::size_t r, std::uint64_t seed_base,
                                        unsigned workers) {
  if (r < 1) throw ParameterError("an ensemble needs at least one realization");
  std::vector<std::uint64_t> seeds(r);
  for (std::size_t k = 0; k < r; ++k) seeds[k] = seed_base + k;
  std::vector<MetricsReport> reports;
  reports.reserve(r);
  for (auto& real : run_realizations(cfg, seeds, workers)) reports.push_back(std::move(real.metrics));
  return reports;
}

// ---------------------------------------------------------------------------
// Plans

void SweepPlan::validate() const {
  if (realizations < 1) throw ParameterError("realizations must be >= 1");
  if (n_values.empty()) throw ParameterError("plan lists no n values");
  if (q_values.empty()) throw ParameterError("plan lists no q values");
  if (strategies.empty()) throw ParameterError("plan lists no strategies");
  for (const auto& p : points()) p.validate();
}

std::vector<ModelConfig> SweepPlan::points() const {
  std::vector<ModelConfig> out;
  for (Strategy s : strategies) {
    for (std::size_t n : n_values) {
      for (Trait q : q_values) {
        ModelConfig c = base;
        c.strategy = s;
        c.n = n;
        c.q = q;
        out.push_back(c);
      }
    }
  }
  return out;
}

namespace {

template <typename T, typename Parse>
std::vector<T> parse_list(std::string_view key, std::string_view value, Parse parse) {
  std::vector<T> out;
  for (const auto& item : text::split_csv(value)) {
    if (text::trim(item).empty()) continue;
    out.push_back(parse(key, item));
  }
  if (out.empty()) throw ParameterError("plan key '" + std::string(key) + "' has no values");
  return out;
}

std::uint64_t parse_count(std::string_view key, std::string_view v) {
  const auto parsed = text::parse_uint(v);
  if (!parsed) {
    throw ParameterError("plan key '" + std::string(key) + "': '" + std::string(v) +
                         "' is not a non-negative integer");
  }
  return *parsed;
}

}  // namespace

SweepPlan parse_plan(const std::string& content) {
  SweepPlan plan;
  plan.realizations = 100;
  bool has_n = false, has_q = false, has_strategy = false;
  const auto lines = text::split_lines(content);
  for (std::size_t k = 0; k < lines.size(); ++k) {
    std::string_view line = lines[k];
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = text::trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ParameterError("plan line " + std::to_string(k + 1) + ": expected key = value");
    }
    const std::string key = text::to_lower(text::trim(line.substr(0, eq)));
    const std::string_view value = text::trim(line.substr(eq + 1));

    if (key == "n") {
      plan.n_values = parse_list<std::size_t>(key, value, parse_count);
      has_n = true;
    } else if (key == "q") {
      plan.q_values = parse_list<Trait>(key, value, [](std::string_view kk, std::string_view v) {
        const auto q = parse_count(kk, v);
        if (q > 0xffffffffULL) throw ParameterError("q value too large");
        return static_cast<Trait>(q);
      });
      has_q = true;
    } else if (key == "strategy" || key == "strategies") {
      plan.strategies = parse_list<Strategy>(
          key, value, [](std::string_view, std::string_view v) { return parse_strategy(v); });
      has_strategy = true;
    } else if (key == "f") {
      plan.base.f = parse_count(key, value);
    } else if (key == "avg_degree" || key == "k") {
      const auto d = text::parse_double(value);
      if (!d) throw ParameterError("plan key 'avg_degree' is not a number");
      plan.base.avg_degree = *d;
    } else if (key == "realizations" || key == "r") {
      plan.realizations = parse_count(key, value);
    } else if (key == "seed_base" || key == "seed") {
      plan.seed_base = parse_count(key, value);
    } else if (key == "max_steps") {
      plan.base.max_steps = parse_count(key, value);
    } else if (key == "quiescence_window") {
      plan.base.quiescence_window = parse_count(key, value);
    } else {
      throw ParameterError("plan line " + std::to_string(k + 1) + ": unknown key '" + key + "'");
    }
  }
  if (!has_n || !has_q || !has_strategy) {
    throw ParameterError("plan must define n, q and strategy");
  }
  plan.validate();
  return plan;
}

std::uint64_t realization_seed(std::uint64_t seed_base, const ModelConfig& point, std::size_t index) {
  std::uint64_t h = mix64(point.n);
  h = mix64(h ^ point.q);
  h = mix64(h ^ point.f);
  h = mix64(h ^ std::bit_cast<std::uint64_t>(point.avg_degree));
  h = mix64(h ^ static_cast<std::uint64_t>(point.strategy));
  h = mix64(h ^ index);
  return seed_base ^ h;
}

// ---------------------------------------------------------------------------
// Aggregation

Summary summarize(std::span<const double> values) {
  Summary s;
  s.count = values.size();
  if (values.empty()) return s;
  double sum = 0.0;
  for (double v : values) sum += v;
  s.mean = sum / static_cast<double>(values.size());
  if (values.size() > 1) {
    double ss = 0.0;
    for (double v : values) ss += (v - s.mean) * (v - s.mean);
    const double sd = std::sqrt(ss / static_cast<double>(values.size() - 1));
    s.stderr_ = sd / std::sqrt(static_cast<double>(values.size()));
  }
  return s;
}

std::vector<std::pair<std::string, std::optional<double>>> observables(const MetricsReport& m) {
  const double n = m.n > 0 ? static_cast<double>(m.n) : 1.0;
  auto stop_is = [&m](StopReason r) -> std::optional<double> {
    if (!m.stop_reason) return std::nullopt;
    return *m.stop_reason == r ? 1.0 : 0.0;
  };
  std::optional<double> steps;
  if (m.steps) steps = static_cast<double>(*m.steps);
  return {
      {"domains", static_cast<double>(m.domain_report.count)},
      {"components", static_cast<double>(m.component_report.count)},
      {"largest_domain_fraction", static_cast<double>(m.domain_report.largest) / n},
      {"largest_component_fraction", static_cast<double>(m.component_report.largest) / n},
      {"C", m.global_clustering},
      {"mean_c", m.mean_local_clustering},
      {"avg_path", m.avg_path_length},
      {"steps", steps},
      {"stop_frozen", stop_is(StopReason::Frozen)},
      {"stop_stalled", stop_is(StopReason::Stalled)},
      {"stop_budget", stop_is(StopReason::Budget)},
  };
}

std::vector<EnsembleRow> aggregate(const ModelConfig& point, std::span<const Realization> runs) {
  std::vector<EnsembleRow> rows;
  if (runs.empty()) return rows;
  const auto names = observables(runs.front().metrics);
  std::vector<std::vector<double>> values(names.size());
  for (const auto& run : runs) {
    const auto obs = observables(run.metrics);
    for (std::size_t k = 0; k < obs.size(); ++k) {
      if (obs[k].second) values[k].push_back(*obs[k].second);
    }
  }
  for (std::size_t k = 0; k < names.size(); ++k) {
    if (values[k].empty()) continue;
    const Summary s = summarize(values[k]);
    EnsembleRow row;
    row.n = point.n;
    row.q = point.q;
    row.f = point.f;
    row.avg_degree = point.avg_degree;
    row.strategy = point.strategy;
    row.observable = names[k].first;
    row.mean = s.mean;
    row.stderr_ = s.stderr_;
    row.r = s.count;
    rows.push_back(std::move(row));
  }
  return rows;
}

SweepResult sweep(const SweepPlan& plan, unsigned workers) {
  plan.validate();
  SweepResult result;
  for (const ModelConfig& point : plan.points()) {
    std::vector<std::uint64_t> seeds(plan.realizations);
    for (std::size_t k = 0; k < seeds.size(); ++k) seeds[k] = realization_seed(plan.seed_base, point, k);
    auto runs = run_realizations(point, seeds, workers);
    auto rows = aggregate(point, runs);
    result.rows.insert(result.rows.end(), rows.begin(), rows.end());
    for (auto& r : runs) result.realizations.push_back(std::move(r));
  }
  return result;
}

std::string format_realizations_csv(std::span<const Realization> runs) {
  std::string out = std::string(kRealizationHeader) + "\n";
  for (const auto& r : runs) {
    const auto& c = r.config;
    const auto& m = r.metrics;
    out += std::to_string(c.n) + ',' + std::to_string(c.q) + ',' + std::to_string(c.f) + ',' +
           text::format_double(c.avg_degree) + ',' + std::string(to_string(c.strategy)) + ',' +
           std::to_string(c.seed) + ',' + std::to_string(m.component_report.count) + ',' +
           std::to_string(m.component_report.largest) + ',' + std::to_string(m.domain_report.count) + ',' +
           std::to_string(m.domain_report.largest) + ',' + text::format_double(m.global_clustering) + ',' +
           text::format_double(m.mean_local_clustering) + ',' + text::format_optional(m.avg_path_length) +
           ',' + (m.steps ? std::to_string(*m.steps) : std::string{}) + ',' +
           (m.stop_reason ? std::string(to_string(*m.stop_reason)) : std::string{}) + '\n';
  }
  return out;
}

std::string format_aggregate_csv(std::span<const EnsembleRow> rows) {
  std::string out = std::string(kAggregateHeader) + "\n";
  for (const auto& r : rows) {
    out += std::to_string(r.n) + ',' + std::to_string(r.q) + ',' + std::to_string(r.f) + ',' +
           text::format_double(r.avg_degree) + ',' + std::string(to_string(r.strategy)) + ',' +
           r.observable + ',' + text::format_double(r.mean) + ',' + text::format_double(r.stderr_) + ',' +
           std::to_string(r.r) + '\n';
  }
  return out;
}

// ---------------------------------------------------------------------------

LinearFit linear_fit(std::span<const std::pair<double, double>> points) {
  if (points.size() < 2) throw ParameterError("linear_fit needs at least two points");
  double mx = 0.0, my = 0.0;
  for (auto [x, y] : points) {
    mx += x;
    my += y;
  }
  mx /= static_cast<double>(points.size());
  my /= static_cast<double>(points.size());
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (auto [x, y] : points) {
    sxx += (x - mx) * (x - mx);
    sxy += (x - mx) * (y - my);
    syy += (y - my) * (y - my);
  }
  if (sxx == 0.0) throw ParameterError("linear_fit needs at least two distinct x values");
  LinearFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  if (syy == 0.0) {
    fit.r_squared = 1.0;
  } else {
    double ss_res = 0.0;
    for (auto [x, y] : points) {
      const double e = y - (fit.slope * x + fit.intercept);
      ss_res += e * e;
    }
    fit.r_squared = 1.0 - ss_res / syy;
  }
  return fit;
}

}  // namespace langnet

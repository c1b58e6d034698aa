#include "langnet/model.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "langnet/errors.hpp"
#include "langnet/text_io.hpp"

namespace langnet {

namespace {

constexpr std::pair<Strategy, std::string_view> kStrategyNames[] = {
    {Strategy::LocalUniform, "local-uniform"},
    {Strategy::LocalPreferential, "local-preferential"},
    {Strategy::GlobalUniform, "global-uniform"},
    {Strategy::StaticLattice, "static-lattice"},
};

constexpr std::pair<StopReason, std::string_view> kStopNames[] = {
    {StopReason::Frozen, "frozen"},
    {StopReason::Stalled, "stalled"},
    {StopReason::Budget, "budget"},
};

}  // namespace

std::string_view to_string(Strategy s) {
  for (auto [value, name] : kStrategyNames) {
    if (value == s) return name;
  }
  return "unknown";
}

Strategy parse_strategy(std::string_view name) {
  const std::string key = text::to_lower(text::trim(name));
  for (auto [value, known] : kStrategyNames) {
    if (known == key) return value;
  }
  throw ParameterError("unknown strategy '" + std::string(name) +
                       "' (expected local-uniform, local-preferential, global-uniform or static-lattice)");
}

std::string_view to_string(StepKind k) {
  switch (k) {
    case StepKind::NoOp: return "noop";
    case StepKind::Imitation: return "imitation";
    case StepKind::Rewired: return "rewired";
    case StepKind::RewireSkipped: return "rewire-skipped";
  }
  return "unknown";
}

std::string_view to_string(StopReason r) {
  for (auto [value, name] : kStopNames) {
    if (value == r) return name;
  }
  return "unknown";
}

StopReason parse_stop_reason(std::string_view name) {
  for (auto [value, known] : kStopNames) {
    if (known == text::trim(name)) return value;
  }
  throw ParameterError("unknown stop reason '" + std::string(name) + "'");
}

// ---------------------------------------------------------------------------
// StateMatrix

StateMatrix::StateMatrix(std::size_t rows, std::size_t traits, Trait fill)
    : rows_(rows), traits_(traits), data_(rows * traits, fill) {}

bool StateMatrix::same_row(std::size_t a, std::size_t b) const {
  const auto ra = row(a);
  const auto rb = row(b);
  return std::equal(ra.begin(), ra.end(), rb.begin());
}

// ---------------------------------------------------------------------------
// ModelConfig

void ModelConfig::validate() const {
  if (n < 2) throw ParameterError("n must be >= 2, got " + std::to_string(n));
  if (f < 1) throw ParameterError("f must be >= 1");
  if (q < 1) throw ParameterError("q must be >= 1");
  if (strategy == Strategy::StaticLattice) {
    (void)lattice_side();
    return;
  }
  if (!std::isfinite(avg_degree) || avg_degree < 0.0) {
    throw ParameterError("avg_degree must be a finite non-negative number");
  }
  const double pairs = static_cast<double>(n) * static_cast<double>(n - 1) / 2.0;
  if (std::round(static_cast<double>(n) * avg_degree / 2.0) > pairs) {
    throw ParameterError("avg_degree " + text::format_double(avg_degree) +
                         " needs more edges than a simple graph on " + std::to_string(n) +
                         " nodes can hold");
  }
}

std::size_t ModelConfig::edge_count() const {
  if (strategy == Strategy::StaticLattice) return 2 * n;
  return static_cast<std::size_t>(std::llround(static_cast<double>(n) * avg_degree / 2.0));
}

std::size_t ModelConfig::lattice_side() const {
  auto side = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(n))));
  if (side * side != n || side < 3) {
    throw ParameterError("static-lattice needs n to be a perfect square >= 9, got " + std::to_string(n));
  }
  return side;
}

std::uint64_t ModelConfig::effective_max_steps() const {
  if (max_steps != 0) return max_steps;
  return std::max<std::uint64_t>(1, 50'000ULL * n);
}

std::uint64_t ModelConfig::effective_quiescence_window() const {
  if (quiescence_window != 0) return quiescence_window;
  return 10ULL * n * f;
}

// ---------------------------------------------------------------------------
// Elementary operations

StateMatrix init_states(std::size_t n, std::size_t f, Trait q, Rng& rng) {
  if (q < 1) throw ParameterError("q must be >= 1");
  StateMatrix s(n, f);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t t = 0; t < f; ++t) s.set(i, t, static_cast<Trait>(1 + rng.below(q)));
  }
  return s;
}

std::size_t overlap(std::span<const Trait> a, std::span<const Trait> b) {
  if (a.size() != b.size()) {
    throw ContractError("overlap: trait vectors of length " + std::to_string(a.size()) + " and " +
                        std::to_string(b.size()));
  }
  std::size_t m = 0;
  for (std::size_t t = 0; t < a.size(); ++t) m += a[t] == b[t] ? 1 : 0;
  return m;
}

namespace {

struct Adoption {
  std::size_t trait;
  Trait previous;
};

Adoption adopt_trait(StateMatrix& states, NodeId i, NodeId j, std::size_t m, Rng& rng) {
  const std::size_t f = states.traits();
  if (m == 0 || m >= f) {
    throw ContractError("imitate requires 0 < overlap < F, got overlap " + std::to_string(m) +
                        " with F=" + std::to_string(f));
  }
  auto pick = rng.below(f - m);
  for (std::size_t t = 0; t < f; ++t) {
    if (states.at(i, t) == states.at(j, t)) continue;
    if (pick-- == 0) {
      const Trait previous = states.at(i, t);
      states.set(i, t, states.at(j, t));
      return {t, previous};
    }
  }
  throw ContractError("imitate: no differing trait found");
}

}  // namespace

std::size_t imitate(StateMatrix& states, NodeId i, NodeId j, Rng& rng) {
  return adopt_trait(states, i, j, overlap(states.row(i), states.row(j)), rng).trait;
}

std::optional<NodeId> select_rewire_target(const Graph& g, NodeId i, NodeId j, Strategy strategy,
                                           Rng& rng) {
  (void)j;  // excluded implicitly: it is a neighbor of i
  switch (strategy) {
    case Strategy::StaticLattice:
      return std::nullopt;
    case Strategy::LocalUniform: {
      const auto candidates = distance_two_set(g, i);
      if (candidates.empty()) return std::nullopt;
      return candidates[rng.below(candidates.size())];
    }
    case Strategy::LocalPreferential: {
      const auto candidates = distance_two_set(g, i);
      if (candidates.empty()) return std::nullopt;
      std::uint64_t total = 0;
      for (NodeId l : candidates) {
        const std::uint64_t w = g.degree(l) + 1;
        total += w * w;
      }
      auto ticket = rng.below(total);
      for (NodeId l : candidates) {
        const std::uint64_t w = g.degree(l) + 1;
        if (ticket < w * w) return l;
        ticket -= w * w;
      }
      return candidates.back();
    }
    case Strategy::GlobalUniform: {
      if (g.degree(i) + 1 >= g.node_count()) return std::nullopt;
      // Rejection sampling is exactly uniform over non-neighbors.
      for (;;) {
        const auto l = static_cast<NodeId>(rng.below(g.node_count()));
        if (l != i && !g.has_edge(i, l)) return l;
      }
    }
  }
  return std::nullopt;
}

StepOutcome step(Graph& g, StateMatrix& states, const ModelConfig& cfg, Rng& rng) {
  if (g.edge_count() == 0) throw ContractError("step: the graph has no edges");
  if (states.rows() != g.node_count()) {
    throw ContractError("step: state rows do not match node count");
  }
  StepOutcome out;
  out.active = static_cast<NodeId>(rng.below(g.node_count()));
  out.partner = out.active;
  const auto nbrs = g.neighbors(out.active);
  if (nbrs.empty()) return out;
  out.partner = nbrs[rng.below(nbrs.size())];

  const NodeId i = out.active;
  const NodeId j = out.partner;
  const std::size_t f = states.traits();
  const std::size_t m = overlap(states.row(i), states.row(j));
  if (m == f) return out;
  if (m == 0) {
    if (auto l = select_rewire_target(g, i, j, cfg.strategy, rng)) {
      rewire(g, i, j, *l);
      out.kind = StepKind::Rewired;
      out.detail = *l;
    } else {
      out.kind = StepKind::RewireSkipped;
    }
    return out;
  }
  if (rng.below(f) < m) {
    const Adoption a = adopt_trait(states, i, j, m, rng);
    out.kind = StepKind::Imitation;
    out.detail = static_cast<std::uint32_t>(a.trait);
    out.replaced_value = a.previous;
  }
  return out;
}

bool is_quiescent(const Graph& g, const StateMatrix& states) {
  for (auto [u, v] : g.edges()) {
    if (!states.same_row(u, v)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Simulation

namespace {

Graph initial_graph(const ModelConfig& cfg, Rng& rng) {
  if (cfg.strategy == Strategy::StaticLattice) return lattice_graph(cfg.lattice_side());
  return random_graph(cfg.n, cfg.edge_count(), rng);
}

}  // namespace

Simulation::Simulation(const ModelConfig& cfg, Rng& rng) : cfg_(cfg) {
  cfg_.validate();
  graph_ = initial_graph(cfg_, rng);
  states_ = init_states(cfg_.n, cfg_.f, cfg_.q, rng);
  window_ = cfg_.effective_quiescence_window();
  recount();
}

Simulation::Simulation(const ModelConfig& cfg, Graph graph, StateMatrix states)
    : cfg_(cfg), graph_(std::move(graph)), states_(std::move(states)) {
  if (states_.rows() != graph_.node_count()) {
    throw ParameterError("state rows (" + std::to_string(states_.rows()) + ") != node count (" +
                         std::to_string(graph_.node_count()) + ")");
  }
  cfg_.n = graph_.node_count();
  cfg_.f = states_.traits();
  window_ = cfg_.effective_quiescence_window();
  recount();
}

void Simulation::count_edge(NodeId a, NodeId b, int sign) {
  const std::size_t m = overlap(states_.row(a), states_.row(b));
  std::size_t* bucket = m == 0 ? &zero_edges_ : (m < cfg_.f ? &active_edges_ : nullptr);
  if (bucket) *bucket = sign > 0 ? *bucket + 1 : *bucket - 1;
}

void Simulation::recount() {
  active_edges_ = 0;
  zero_edges_ = 0;
  for (auto [u, v] : graph_.edges()) count_edge(u, v, +1);
}

StepOutcome Simulation::advance(Rng& rng) {
  const StepOutcome out = step(graph_, states_, cfg_, rng);
  ++steps_;
  if (out.kind == StepKind::Imitation) {
    const NodeId i = out.active;
    const std::size_t t = *out.detail;
    const Trait now = states_.at(i, t);
    const Trait before = *out.replaced_value;
    for (NodeId nb : graph_.neighbors(i)) {
      const Trait theirs = states_.at(nb, t);
      const std::size_t m_new = overlap(states_.row(i), states_.row(nb));
      const std::size_t m_old = m_new - (now == theirs ? 1 : 0) + (before == theirs ? 1 : 0);
      if (m_old == m_new) continue;
      auto classify = [this](std::size_t m) -> std::size_t* {
        return m == 0 ? &zero_edges_ : (m < cfg_.f ? &active_edges_ : nullptr);
      };
      if (auto* b = classify(m_old)) --*b;
      if (auto* b = classify(m_new)) ++*b;
    }
  } else if (out.kind == StepKind::Rewired) {
    --zero_edges_;
    count_edge(out.active, static_cast<NodeId>(*out.detail), +1);
  }
  if (out.kind == StepKind::Imitation || active_edges_ > 0) {
    stall_run_ = 0;
  } else {
    ++stall_run_;
  }
  return out;
}

StopReason Simulation::run_to_completion(Rng& rng) {
  const std::uint64_t budget = cfg_.effective_max_steps();
  for (;;) {
    if (frozen()) return StopReason::Frozen;
    if (stalled()) return StopReason::Stalled;
    if (steps_ >= budget) return StopReason::Budget;
    advance(rng);
  }
}

RunResult run(const ModelConfig& cfg, Rng& rng) {
  Simulation sim(cfg, rng);
  RunResult result;
  result.initial_edges = sim.graph().edge_count();
  result.stop_reason = sim.run_to_completion(rng);
  result.steps = sim.steps();
  result.graph = sim.graph();
  result.states = sim.states();
  return result;
}

RunResult run(const ModelConfig& cfg) {
  Rng rng(cfg.seed);
  return run(cfg, rng);
}

// ---------------------------------------------------------------------------
// Dumps

std::string format_manifest(const ModelConfig& cfg, const RunResult& result) {
  std::string out;
  auto line = [&out](std::string_view key, const std::string& value) {
    out.append(key).append("=").append(value).append("\n");
  };
  line("n", std::to_string(cfg.n));
  line("avg_degree", text::format_double(cfg.avg_degree));
  line("m", std::to_string(cfg.edge_count()));
  line("f", std::to_string(cfg.f));
  line("q", std::to_string(cfg.q));
  line("strategy", std::string(to_string(cfg.strategy)));
  line("max_steps", std::to_string(cfg.effective_max_steps()));
  line("quiescence_window", std::to_string(cfg.effective_quiescence_window()));
  line("seed", std::to_string(cfg.seed));
  line("stop_reason", std::string(to_string(result.stop_reason)));
  line("steps_executed", std::to_string(result.steps));
  return out;
}

std::string format_states_csv(const StateMatrix& states) {
  std::string out = "node";
  for (std::size_t t = 0; t < states.traits(); ++t) out += ",trait" + std::to_string(t + 1);
  out += '\n';
  for (std::size_t i = 0; i < states.rows(); ++i) {
    out += std::to_string(i);
    for (Trait v : states.row(i)) {
      out += ',';
      out += std::to_string(v);
    }
    out += '\n';
  }
  return out;
}

StateMatrix parse_states_csv(const std::string& content) {
  const auto lines = text::split_lines(content);
  if (lines.empty() || text::trim(lines[0]).substr(0, 4) != "node") {
    throw DataError("states file: missing 'node,trait1,...' header");
  }
  const auto header = text::split_csv(lines[0]);
  const std::size_t f = header.size() - 1;
  if (f == 0) throw DataError("states file: header lists no traits");
  std::vector<Trait> values;
  std::size_t rows = 0;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    if (text::trim(lines[k]).empty()) continue;
    const auto fields = text::split_csv(lines[k]);
    const auto where = "states file line " + std::to_string(k + 1) + ": ";
    if (fields.size() != f + 1) throw DataError(where + "expected " + std::to_string(f + 1) + " fields");
    const auto node = text::parse_uint(fields[0]);
    if (!node || *node != rows) throw DataError(where + "expected node id " + std::to_string(rows));
    for (std::size_t t = 1; t <= f; ++t) {
      const auto v = text::parse_uint(fields[t]);
      if (!v || *v < 1 || *v > 0xffffffffULL) throw DataError(where + "trait values must be integers >= 1");
      values.push_back(static_cast<Trait>(*v));
    }
    ++rows;
  }
  StateMatrix s(rows, f);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t t = 0; t < f; ++t) s.set(i, t, values[i * f + t]);
  }
  return s;
}

}  // namespace langnet

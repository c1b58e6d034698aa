#ifndef LANGNET_MODEL_HPP
#define LANGNET_MODEL_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "langnet/graph.hpp"
#include "langnet/rng.hpp"

namespace langnet {

using Trait = std::uint32_t;

/// How a zero-overlap link picks its new endpoint.
enum class Strategy {
  LocalUniform,       // uniform over nodes two hops away
  LocalPreferential,  // two hops away, weight (k+1)^2
  GlobalUniform,      // uniform over every non-neighbor
  StaticLattice,      // never rewire; square lattice topology
};

std::string_view to_string(Strategy s);
/// Accepts the hyphenated names printed by to_string. Throws ParameterError.
Strategy parse_strategy(std::string_view name);

/// Per-node trait vectors, N rows by F columns, values in 1..q.
class StateMatrix {
 public:
  StateMatrix() = default;
  StateMatrix(std::size_t rows, std::size_t traits, Trait fill = 1);

  std::size_t rows() const { return rows_; }
  std::size_t traits() const { return traits_; }

  std::span<const Trait> row(std::size_t i) const {
    return {data_.data() + i * traits_, traits_};
  }
  std::span<Trait> row(std::size_t i) { return {data_.data() + i * traits_, traits_}; }

  Trait at(std::size_t i, std::size_t f) const { return data_[i * traits_ + f]; }
  void set(std::size_t i, std::size_t f, Trait v) { data_[i * traits_ + f] = v; }

  bool same_row(std::size_t a, std::size_t b) const;

  friend bool operator==(const StateMatrix&, const StateMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t traits_ = 0;
  std::vector<Trait> data_;
};

struct ModelConfig {
  std::size_t n = 100;
  double avg_degree = 4.0;
  std::size_t f = 3;
  Trait q = 2;
  Strategy strategy = Strategy::LocalUniform;
  std::uint64_t max_steps = 0;          // 0 selects 5e6 * N / 100
  std::uint64_t quiescence_window = 0;  // 0 selects 10 * N * F
  std::uint64_t seed = 0;

  /// Throws ParameterError when the configuration cannot be simulated.
  void validate() const;

  /// M = round(N <k> / 2); for the static lattice, 2N.
  std::size_t edge_count() const;
  /// sqrt(N) for the static lattice. Throws ParameterError if N is not a square >= 9.
  std::size_t lattice_side() const;
  std::uint64_t effective_max_steps() const;
  std::uint64_t effective_quiescence_window() const;
};

enum class StepKind { NoOp, Imitation, Rewired, RewireSkipped };
std::string_view to_string(StepKind k);

struct StepOutcome {
  StepKind kind = StepKind::NoOp;
  NodeId active = 0;
  NodeId partner = 0;
  /// Imitation: the adopted trait index. Rewired: the new neighbor.
  std::optional<std::uint32_t> detail;
  /// Imitation only: the active node's value before adoption.
  std::optional<Trait> replaced_value;
};

enum class StopReason { Frozen, Stalled, Budget };
std::string_view to_string(StopReason r);
StopReason parse_stop_reason(std::string_view name);

/// Each entry drawn independently and uniformly from 1..q, row by row.
StateMatrix init_states(std::size_t n, std::size_t f, Trait q, Rng& rng);

/// Number of positions where a and b agree. Throws ContractError on length mismatch.
std::size_t overlap(std::span<const Trait> a, std::span<const Trait> b);

/// Copies one uniformly chosen differing trait from j to i and returns its index.
/// Requires 0 < overlap < F.
std::size_t imitate(StateMatrix& states, NodeId i, NodeId j, Rng& rng);

/// New endpoint for the zero-overlap edge {i,j}, or nullopt when no candidate exists.
/// Candidates are taken on the graph before {i,j} is removed; j is never one.
std::optional<NodeId> select_rewire_target(const Graph& g, NodeId i, NodeId j,
                                           Strategy strategy, Rng& rng);

/// One asynchronous update attempt.
///
/// Draw order: i = below(N); if k_i = 0 the step is a NoOp. Otherwise
/// j = neighbors(i)[below(k_i)] and m = overlap. m = F: NoOp. m = 0: rewire
/// through select_rewire_target. Otherwise below(F) < m decides imitation,
/// and imitate draws the trait with below(F - m).
StepOutcome step(Graph& g, StateMatrix& states, const ModelConfig& cfg, Rng& rng);

/// True iff every edge joins identical trait vectors.
bool is_quiescent(const Graph& g, const StateMatrix& states);

/// A running realization. Tracks the number of edges in each overlap class
/// so stopping conditions are O(1) per step.
class Simulation {
 public:
  /// Builds the initial graph and states from cfg using rng.
  Simulation(const ModelConfig& cfg, Rng& rng);
  /// Starts from a given graph and states.
  Simulation(const ModelConfig& cfg, Graph graph, StateMatrix states);

  StepOutcome advance(Rng& rng);

  /// Runs until frozen, stalled or out of budget.
  StopReason run_to_completion(Rng& rng);

  bool frozen() const { return active_edges_ == 0 && zero_edges_ == 0; }
  bool stalled() const { return stall_run_ >= window_; }

  const Graph& graph() const { return graph_; }
  const StateMatrix& states() const { return states_; }
  const ModelConfig& config() const { return cfg_; }
  std::uint64_t steps() const { return steps_; }
  std::size_t active_edges() const { return active_edges_; }
  std::size_t zero_overlap_edges() const { return zero_edges_; }

 private:
  void count_edge(NodeId a, NodeId b, int sign);
  void recount();

  ModelConfig cfg_;
  Graph graph_;
  StateMatrix states_;
  std::uint64_t steps_ = 0;
  std::uint64_t stall_run_ = 0;
  std::uint64_t window_ = 0;
  std::size_t active_edges_ = 0;  // 0 < m < F
  std::size_t zero_edges_ = 0;    // m = 0
};

struct RunResult {
  Graph graph;
  StateMatrix states;
  std::size_t initial_edges = 0;
  std::uint64_t steps = 0;
  StopReason stop_reason = StopReason::Budget;
};

/// Full realization. Draw order: initial graph, then states, then steps.
RunResult run(const ModelConfig& cfg, Rng& rng);
/// Same, seeded from cfg.seed.
RunResult run(const ModelConfig& cfg);

/// key=value lines: every ModelConfig field, then stop_reason and steps_executed.
std::string format_manifest(const ModelConfig& cfg, const RunResult& result);

/// "node,trait1,...,traitF" header followed by one row per node.
std::string format_states_csv(const StateMatrix& states);

/// Inverse of format_states_csv. Throws DataError on malformed content.
StateMatrix parse_states_csv(const std::string& content);

}  // namespace langnet

#endif  // LANGNET_MODEL_HPP

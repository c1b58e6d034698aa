#ifndef LANGNET_GRAPH_HPP
#define LANGNET_GRAPH_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "langnet/rng.hpp"

namespace langnet {

using NodeId = std::uint32_t;
using Edge = std::pair<NodeId, NodeId>;

/// Undirected simple graph on the dense node set 0..N-1.
///
/// Neighbor lists are kept sorted ascending. The dynamics rely on that order:
/// "the k-th neighbor" and "the k-th rewiring candidate" are defined on
/// ascending node ids, which keeps seeded trajectories independent of the
/// history of insertions and removals.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t node_count);

  std::size_t node_count() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edge_count_; }

  std::span<const NodeId> neighbors(NodeId i) const { return adjacency_[i]; }
  std::size_t degree(NodeId i) const { return adjacency_[i].size(); }

  bool has_edge(NodeId a, NodeId b) const;

  /// Adds {a,b}. Throws ContractError on self-loops, duplicates or bad ids.
  void add_edge(NodeId a, NodeId b);

  /// Removes {a,b}. Throws ContractError if the edge is absent.
  void remove_edge(NodeId a, NodeId b);

  /// All edges as (u,v) with u < v, sorted lexicographically.
  std::vector<Edge> edges() const;

  double average_degree() const;

 private:
  void check_node(NodeId i) const;

  std::vector<std::vector<NodeId>> adjacency_;
  std::size_t edge_count_ = 0;
};

/// Erdős–Rényi G(N,M): m distinct pairs drawn uniformly without replacement.
Graph random_graph(std::size_t n, std::size_t m, Rng& rng);

/// L×L square lattice, von Neumann neighborhood, periodic boundaries. L >= 3.
Graph lattice_graph(std::size_t side);

/// Nodes at shortest-path distance exactly two from i, ascending.
std::vector<NodeId> distance_two_set(const Graph& g, NodeId i);

/// Moves the i-end of edge {i,j} from j to l: removes {i,j}, adds {i,l}.
void rewire(Graph& g, NodeId i, NodeId j, NodeId l);

/// Edge-list dump: one "u v" line per edge, u < v, sorted lexicographically.
std::string format_edge_list(const Graph& g);

/// Parses an edge-list dump into a graph with node_count nodes.
/// Throws DataError on malformed lines, out-of-range ids, self-loops or duplicates.
Graph parse_edge_list(const std::string& content, std::size_t node_count);

/// Largest node id mentioned in an edge-list dump plus one (0 when empty).
std::size_t edge_list_min_nodes(const std::string& content);

}  // namespace langnet

#endif  // LANGNET_GRAPH_HPP

#include "langnet/graph.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <unordered_set>

#include "langnet/errors.hpp"
#include "langnet/text_io.hpp"

namespace langnet {

Graph::Graph(std::size_t node_count) : adjacency_(node_count) {}

void Graph::check_node(NodeId i) const {
  if (i >= adjacency_.size()) {
    throw ContractError("node " + std::to_string(i) + " out of range (N=" +
                        std::to_string(adjacency_.size()) + ")");
  }
}

bool Graph::has_edge(NodeId a, NodeId b) const {
  if (a >= adjacency_.size() || b >= adjacency_.size()) return false;
  const auto& shorter = adjacency_[a].size() <= adjacency_[b].size() ? adjacency_[a] : adjacency_[b];
  const NodeId other = &shorter == &adjacency_[a] ? b : a;
  return std::binary_search(shorter.begin(), shorter.end(), other);
}

void Graph::add_edge(NodeId a, NodeId b) {
  check_node(a);
  check_node(b);
  if (a == b) throw ContractError("self-loop at node " + std::to_string(a));
  auto& la = adjacency_[a];
  auto pos = std::lower_bound(la.begin(), la.end(), b);
  if (pos != la.end() && *pos == b) {
    throw ContractError("duplicate edge " + std::to_string(a) + "-" + std::to_string(b));
  }
  la.insert(pos, b);
  auto& lb = adjacency_[b];
  lb.insert(std::lower_bound(lb.begin(), lb.end(), a), a);
  ++edge_count_;
}

void Graph::remove_edge(NodeId a, NodeId b) {
  check_node(a);
  check_node(b);
  auto& la = adjacency_[a];
  auto pa = std::lower_bound(la.begin(), la.end(), b);
  if (pa == la.end() || *pa != b) {
    throw ContractError("missing edge " + std::to_string(a) + "-" + std::to_string(b));
  }
  la.erase(pa);
  auto& lb = adjacency_[b];
  lb.erase(std::lower_bound(lb.begin(), lb.end(), a));
  --edge_count_;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (NodeId u = 0; u < adjacency_.size(); ++u) {
    for (NodeId v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

double Graph::average_degree() const {
  return adjacency_.empty() ? 0.0 : 2.0 * static_cast<double>(edge_count_) / static_cast<double>(adjacency_.size());
}

namespace {

// Pairs u < v are indexed v(v-1)/2 + u.
Edge decode_pair(std::uint64_t k) {
  auto v = static_cast<std::uint64_t>((1.0 + std::sqrt(1.0 + 8.0 * static_cast<double>(k))) / 2.0);
  while (v * (v - 1) / 2 > k) --v;
  while ((v + 1) * v / 2 <= k) ++v;
  const std::uint64_t u = k - v * (v - 1) / 2;
  return {static_cast<NodeId>(u), static_cast<NodeId>(v)};
}

}  // namespace

Graph random_graph(std::size_t n, std::size_t m, Rng& rng) {
  const std::uint64_t pairs = static_cast<std::uint64_t>(n) * (n > 0 ? n - 1 : 0) / 2;
  if (m > pairs) {
    throw ParameterError("edge count " + std::to_string(m) + " exceeds " + std::to_string(pairs) +
                         " available pairs for N=" + std::to_string(n));
  }
  // Floyd's algorithm: a uniform m-subset of pair indices in m draws.
  std::unordered_set<std::uint64_t> chosen;
  chosen.reserve(m * 2);
  std::vector<std::uint64_t> picked;
  picked.reserve(m);
  for (std::uint64_t t = pairs - m; t < pairs; ++t) {
    const std::uint64_t k = rng.below(t + 1);
    const std::uint64_t take = chosen.contains(k) ? t : k;
    chosen.insert(take);
    picked.push_back(take);
  }
  std::sort(picked.begin(), picked.end());
  Graph g(n);
  for (std::uint64_t k : picked) {
    auto [u, v] = decode_pair(k);
    g.add_edge(u, v);
  }
  return g;
}

Graph lattice_graph(std::size_t side) {
  if (side < 3) throw ParameterError("lattice side must be >= 3, got " + std::to_string(side));
  Graph g(side * side);
  for (std::size_t r = 0; r < side; ++r) {
    for (std::size_t c = 0; c < side; ++c) {
      const auto id = static_cast<NodeId>(r * side + c);
      g.add_edge(id, static_cast<NodeId>(r * side + (c + 1) % side));
      g.add_edge(id, static_cast<NodeId>(((r + 1) % side) * side + c));
    }
  }
  return g;
}

std::vector<NodeId> distance_two_set(const Graph& g, NodeId i) {
  std::vector<NodeId> out;
  const auto direct = g.neighbors(i);
  for (NodeId nb : direct) {
    for (NodeId l : g.neighbors(nb)) {
      if (l != i && !std::binary_search(direct.begin(), direct.end(), l)) out.push_back(l);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void rewire(Graph& g, NodeId i, NodeId j, NodeId l) {
  if (!g.has_edge(i, j)) {
    throw ContractError("rewire: " + std::to_string(i) + "-" + std::to_string(j) + " is not an edge");
  }
  if (l == i) throw ContractError("rewire: target equals active node " + std::to_string(i));
  if (g.has_edge(i, l)) {
    throw ContractError("rewire: " + std::to_string(i) + "-" + std::to_string(l) + " already exists");
  }
  g.remove_edge(i, j);
  g.add_edge(i, l);
}

std::string format_edge_list(const Graph& g) {
  std::string out;
  for (auto [u, v] : g.edges()) {
    out += std::to_string(u);
    out += ' ';
    out += std::to_string(v);
    out += '\n';
  }
  return out;
}

namespace {

std::vector<Edge> parse_edges(const std::string& content) {
  std::vector<Edge> edges;
  const auto lines = text::split_lines(content);
  for (std::size_t k = 0; k < lines.size(); ++k) {
    const std::string_view line = text::trim(lines[k]);
    if (line.empty() || line.front() == '#') continue;
    const auto sep = line.find_first_of(" \t");
    std::optional<std::uint64_t> u, v;
    if (sep != std::string_view::npos) {
      u = text::parse_uint(line.substr(0, sep));
      v = text::parse_uint(line.substr(sep + 1));
    }
    if (!u || !v || *u > 0xffffffffULL || *v > 0xffffffffULL) {
      throw DataError("edge list line " + std::to_string(k + 1) + ": expected 'u v', got '" +
                      std::string(line) + "'");
    }
    edges.emplace_back(static_cast<NodeId>(*u), static_cast<NodeId>(*v));
  }
  return edges;
}

}  // namespace

std::size_t edge_list_min_nodes(const std::string& content) {
  std::size_t n = 0;
  for (auto [u, v] : parse_edges(content)) n = std::max<std::size_t>(n, std::max(u, v) + std::size_t{1});
  return n;
}

Graph parse_edge_list(const std::string& content, std::size_t node_count) {
  Graph g(node_count);
  for (auto [u, v] : parse_edges(content)) {
    if (u >= node_count || v >= node_count) {
      throw DataError("edge " + std::to_string(u) + "-" + std::to_string(v) +
                      " references a node outside 0.." + std::to_string(node_count) + "-1");
    }
    if (u == v || g.has_edge(u, v)) {
      throw DataError("edge " + std::to_string(u) + "-" + std::to_string(v) +
                      " is a self-loop or duplicate");
    }
    g.add_edge(u, v);
  }
  return g;
}

}  // namespace langnet

// Brute-force metric oracles for tests. Deliberately simple: BFS labelling,
// triple enumeration and Floyd–Warshall, each independent of the library's
// union-find and per-source BFS code paths.

#ifndef LANGNET_TESTS_ORACLES_HPP
#define LANGNET_TESTS_ORACLES_HPP

#include <cstdint>
#include <deque>
#include <limits>
#include <optional>
#include <vector>

#include "langnet/graph.hpp"
#include "langnet/model.hpp"

namespace oracle {

using Matrix = std::vector<std::vector<bool>>;

inline Matrix adjacency_matrix(const langnet::Graph& g) {
  const std::size_t n = g.node_count();
  Matrix a(n, std::vector<bool>(n, false));
  for (auto [u, v] : g.edges()) a[u][v] = a[v][u] = true;
  return a;
}

/// Labels by BFS from the lowest unlabelled node, so label order matches
/// "numbered by smallest member".
template <typename Linked>
std::vector<int> bfs_labels(std::size_t n, Linked linked) {
  std::vector<int> label(n, -1);
  int next = 0;
  for (std::size_t s = 0; s < n; ++s) {
    if (label[s] >= 0) continue;
    std::deque<std::size_t> queue{s};
    label[s] = next;
    while (!queue.empty()) {
      const std::size_t u = queue.front();
      queue.pop_front();
      for (std::size_t v = 0; v < n; ++v) {
        if (label[v] < 0 && linked(u, v)) {
          label[v] = next;
          queue.push_back(v);
        }
      }
    }
    ++next;
  }
  return label;
}

inline std::vector<int> component_labels(const langnet::Graph& g) {
  const Matrix a = adjacency_matrix(g);
  return bfs_labels(g.node_count(), [&](std::size_t u, std::size_t v) { return bool(a[u][v]); });
}

inline std::vector<int> domain_labels(const langnet::Graph& g, const langnet::StateMatrix& s) {
  const Matrix a = adjacency_matrix(g);
  return bfs_labels(g.node_count(), [&](std::size_t u, std::size_t v) {
    if (!a[u][v]) return false;
    for (std::size_t t = 0; t < s.traits(); ++t)
      if (s.at(u, t) != s.at(v, t)) return false;
    return true;
  });
}

inline double global_clustering(const langnet::Graph& g) {
  const Matrix a = adjacency_matrix(g);
  const std::size_t n = g.node_count();
  std::uint64_t triangles = 0, triplets = 0;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y)
      for (std::size_t z = y + 1; z < n; ++z)
        if (a[x][y] && a[y][z] && a[x][z]) ++triangles;
  // Connected triplet: a centre c with two distinct neighbours.
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = x + 1; y < n; ++y)
        if (a[c][x] && a[c][y]) ++triplets;
  return triplets == 0 ? 0.0 : 3.0 * static_cast<double>(triangles) / static_cast<double>(triplets);
}

inline double local_clustering(const langnet::Graph& g, std::size_t i) {
  const Matrix a = adjacency_matrix(g);
  std::vector<std::size_t> nb;
  for (std::size_t v = 0; v < g.node_count(); ++v)
    if (a[i][v]) nb.push_back(v);
  if (nb.size() < 2) return 0.0;
  std::size_t links = 0;
  for (std::size_t x = 0; x < nb.size(); ++x)
    for (std::size_t y = x + 1; y < nb.size(); ++y)
      if (a[nb[x]][nb[y]]) ++links;
  return static_cast<double>(links) / (nb.size() * (nb.size() - 1) / 2.0);
}

inline std::optional<double> average_path_length(const langnet::Graph& g) {
  const std::size_t n = g.node_count();
  constexpr std::uint64_t inf = std::numeric_limits<std::uint64_t>::max() / 4;
  std::vector<std::vector<std::uint64_t>> d(n, std::vector<std::uint64_t>(n, inf));
  for (std::size_t i = 0; i < n; ++i) d[i][i] = 0;
  for (auto [u, v] : g.edges()) d[u][v] = d[v][u] = 1;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
  std::uint64_t total = 0, pairs = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (d[i][j] < inf) {
        total += d[i][j];
        ++pairs;
      }
  if (pairs == 0) return std::nullopt;
  return static_cast<double>(total) / static_cast<double>(pairs);
}

/// Random simple graph by independent coin flips per pair (a different
/// generator from the library's G(N,M)), plus random states.
inline langnet::Graph coin_flip_graph(std::size_t n, double p, langnet::Rng& rng) {
  langnet::Graph g(n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (rng.unit() < p) g.add_edge(static_cast<langnet::NodeId>(u), static_cast<langnet::NodeId>(v));
  return g;
}

}  // namespace oracle

#endif  // LANGNET_TESTS_ORACLES_HPP

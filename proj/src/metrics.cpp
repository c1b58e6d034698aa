#include "langnet/metrics.hpp"

#include <algorithm>
#include <numeric>

#include "langnet/errors.hpp"
#include "langnet/text_io.hpp"

namespace langnet {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n), rank_(n, 0) {
    std::iota(parent_.begin(), parent_.end(), 0u);
  }

  std::uint32_t find(std::uint32_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (rank_[a] < rank_[b]) std::swap(a, b);
    parent_[b] = a;
    if (rank_[a] == rank_[b]) ++rank_[a];
  }

 private:
  std::vector<std::uint32_t> parent_;
  std::vector<std::uint8_t> rank_;
};

PartitionReport report_from(DisjointSets& sets, std::size_t n) {
  PartitionReport r;
  r.labels.assign(n, 0);
  std::vector<std::uint32_t> label_of_root(n, UINT32_MAX);
  for (std::uint32_t i = 0; i < n; ++i) {
    const std::uint32_t root = sets.find(i);
    if (label_of_root[root] == UINT32_MAX) {
      label_of_root[root] = static_cast<std::uint32_t>(r.sizes.size());
      r.sizes.push_back(0);
    }
    r.labels[i] = label_of_root[root];
    ++r.sizes[r.labels[i]];
  }
  r.count = r.sizes.size();
  r.largest = r.sizes.empty() ? 0 : *std::max_element(r.sizes.begin(), r.sizes.end());
  return r;
}

}  // namespace

PartitionReport components(const Graph& g) {
  DisjointSets sets(g.node_count());
  for (auto [u, v] : g.edges()) sets.unite(u, v);
  return report_from(sets, g.node_count());
}

PartitionReport domains(const Graph& g, const StateMatrix& states) {
  if (states.rows() != g.node_count()) {
    throw DataError("domains: " + std::to_string(states.rows()) + " state rows for " +
                    std::to_string(g.node_count()) + " nodes");
  }
  DisjointSets sets(g.node_count());
  for (auto [u, v] : g.edges()) {
    if (states.same_row(u, v)) sets.unite(u, v);
  }
  return report_from(sets, g.node_count());
}

namespace {

std::size_t links_among_neighbors(const Graph& g, NodeId i) {
  const auto nbrs = g.neighbors(i);
  std::size_t links = 0;
  for (NodeId a : nbrs) {
    // Count common neighbors of i and a above a; sorted-list intersection.
    const auto na = g.neighbors(a);
    auto p = std::upper_bound(nbrs.begin(), nbrs.end(), a);
    auto q = std::upper_bound(na.begin(), na.end(), a);
    while (p != nbrs.end() && q != na.end()) {
      if (*p < *q) {
        ++p;
      } else if (*q < *p) {
        ++q;
      } else {
        ++links;
        ++p;
        ++q;
      }
    }
  }
  return links;
}

}  // namespace

double local_clustering(const Graph& g, NodeId i) {
  const std::size_t k = g.degree(i);
  if (k < 2) return 0.0;
  return static_cast<double>(links_among_neighbors(g, i)) / (static_cast<double>(k) * (k - 1) / 2.0);
}

double mean_local_clustering(const Graph& g) {
  if (g.node_count() == 0) return 0.0;
  double sum = 0.0;
  for (NodeId i = 0; i < g.node_count(); ++i) sum += local_clustering(g, i);
  return sum / static_cast<double>(g.node_count());
}

double global_clustering(const Graph& g) {
  std::uint64_t closed = 0;
  std::uint64_t triplets = 0;
  for (NodeId i = 0; i < g.node_count(); ++i) {
    const std::uint64_t k = g.degree(i);
    triplets += k * (k - (k > 0 ? 1 : 0)) / 2;
    closed += links_among_neighbors(g, i);
  }
  if (triplets == 0) return 0.0;
  // Each triangle closes one triplet at each of its three corners.
  return static_cast<double>(closed) / static_cast<double>(triplets);
}

std::optional<double> average_path_length(const Graph& g) {
  const std::size_t n = g.node_count();
  std::vector<std::uint32_t> dist(n);
  std::vector<NodeId> frontier;
  frontier.reserve(n);
  std::uint64_t total = 0;
  std::uint64_t pairs = 0;
  for (NodeId s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), UINT32_MAX);
    dist[s] = 0;
    frontier.clear();
    frontier.push_back(s);
    for (std::size_t head = 0; head < frontier.size(); ++head) {
      const NodeId u = frontier[head];
      for (NodeId v : g.neighbors(u)) {
        if (dist[v] != UINT32_MAX) continue;
        dist[v] = dist[u] + 1;
        frontier.push_back(v);
        if (v > s) {
          total += dist[v];
          ++pairs;
        }
      }
    }
  }
  if (pairs == 0) return std::nullopt;
  return static_cast<double>(total) / static_cast<double>(pairs);
}

std::map<std::size_t, std::size_t> degree_histogram(const Graph& g) {
  std::map<std::size_t, std::size_t> h;
  for (NodeId i = 0; i < g.node_count(); ++i) ++h[g.degree(i)];
  return h;
}

MetricsReport measure(const Graph& g, const StateMatrix& states) {
  MetricsReport r;
  r.n = g.node_count();
  r.m = g.edge_count();
  r.component_report = components(g);
  r.domain_report = domains(g, states);
  r.global_clustering = global_clustering(g);
  r.mean_local_clustering = mean_local_clustering(g);
  r.avg_path_length = average_path_length(g);
  r.degree_histogram = degree_histogram(g);
  return r;
}

MetricsReport measure(const RunResult& result) {
  MetricsReport r = measure(result.graph, result.states);
  r.stop_reason = result.stop_reason;
  r.steps = result.steps;
  return r;
}

std::string format_metrics_row(const MetricsReport& r) {
  std::string out;
  out += std::to_string(r.n) + ',';
  out += std::to_string(r.m) + ',';
  out += std::to_string(r.component_report.count) + ',';
  out += std::to_string(r.component_report.largest) + ',';
  out += std::to_string(r.domain_report.count) + ',';
  out += std::to_string(r.domain_report.largest) + ',';
  out += text::format_double(r.global_clustering) + ',';
  out += text::format_double(r.mean_local_clustering) + ',';
  out += text::format_optional(r.avg_path_length) + ',';
  if (r.stop_reason) out += to_string(*r.stop_reason);
  out += ',';
  if (r.steps) out += std::to_string(*r.steps);
  return out;
}

}  // namespace langnet

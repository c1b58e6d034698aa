#ifndef LANGNET_METRICS_HPP
#define LANGNET_METRICS_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "langnet/graph.hpp"
#include "langnet/model.hpp"

namespace langnet {

/// A node partition. Labels are dense, numbered in order of each part's
/// smallest node.
struct PartitionReport {
  std::vector<std::uint32_t> labels;
  std::size_t count = 0;
  std::vector<std::size_t> sizes;  // indexed by label
  std::size_t largest = 0;
};

/// Connected components; isolated nodes are singletons.
PartitionReport components(const Graph& g);

/// Maximal connected sets joined by edges whose endpoints have identical vectors.
PartitionReport domains(const Graph& g, const StateMatrix& states);

/// Fraction of neighbor pairs of i that are linked; 0 when k_i < 2.
double local_clustering(const Graph& g, NodeId i);

double mean_local_clustering(const Graph& g);

/// 3 * triangles / connected triplets; 0 when there are no triplets.
double global_clustering(const Graph& g);

/// Mean BFS distance over connected unordered pairs; nullopt if there are none.
std::optional<double> average_path_length(const Graph& g);

std::map<std::size_t, std::size_t> degree_histogram(const Graph& g);

struct MetricsReport {
  std::size_t n = 0;
  std::size_t m = 0;
  PartitionReport component_report;
  PartitionReport domain_report;
  double global_clustering = 0.0;
  double mean_local_clustering = 0.0;
  std::optional<double> avg_path_length;
  std::map<std::size_t, std::size_t> degree_histogram;
  std::optional<StopReason> stop_reason;
  std::optional<std::uint64_t> steps;
};

MetricsReport measure(const Graph& g, const StateMatrix& states);
MetricsReport measure(const RunResult& result);

/// Column order of format_metrics_row.
inline constexpr const char* kMetricsHeader =
    "n,m,components,largest_component,domains,largest_domain,C,mean_c,avg_path,stop_reason,steps";

/// One CSV row; absent values are empty fields.
std::string format_metrics_row(const MetricsReport& r);

}  // namespace langnet

#endif  // LANGNET_METRICS_HPP

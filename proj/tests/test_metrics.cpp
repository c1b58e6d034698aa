#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numeric>

#include "langnet/metrics.hpp"
#include "oracles.hpp"

using namespace langnet;

namespace {

Graph from_edges(std::size_t n, std::initializer_list<Edge> edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

Graph complete(std::size_t n) {
  Graph g(n);
  for (NodeId u = 0; u < n; ++u)
    for (NodeId v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

StateMatrix rows(std::initializer_list<std::initializer_list<Trait>> r) {
  StateMatrix s(r.size(), r.begin()->size());
  std::size_t i = 0;
  for (const auto& row : r) {
    std::size_t t = 0;
    for (Trait v : row) s.set(i, t++, v);
    ++i;
  }
  return s;
}

std::vector<int> as_int(const std::vector<std::uint32_t>& v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("components examples") {
  const auto two_pairs = components(from_edges(5, {{0, 1}, {2, 3}}));
  CHECK(two_pairs.count == 3);
  auto sizes = two_pairs.sizes;
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == std::vector<std::size_t>{1, 2, 2});
  CHECK(two_pairs.largest == 2);

  const auto k4 = components(complete(4));
  CHECK(k4.count == 1);
  CHECK(k4.largest == 4);

  CHECK(components(Graph(3)).count == 3);
}

TEST_CASE("domains examples") {
  // connectivity is required: c shares a's state but is isolated
  CHECK(domains(from_edges(3, {{0, 1}}), rows({{1, 2}, {1, 2}, {1, 2}})).count == 2);
  CHECK(domains(complete(4), rows({{3}, {3}, {3}, {3}})).count == 1);
  CHECK(domains(from_edges(3, {{0, 1}, {1, 2}}), rows({{1, 1}, {2, 1}, {1, 1}})).count == 3);
}

TEST_CASE("partition report invariants") {
  Rng rng(1);
  const Graph g = random_graph(40, 30, rng);
  const StateMatrix s = init_states(40, 2, 2, rng);
  for (const auto& r : {components(g), domains(g, s)}) {
    CHECK(std::accumulate(r.sizes.begin(), r.sizes.end(), std::size_t{0}) == 40);
    CHECK(r.count == r.sizes.size());
    CHECK(r.largest == *std::max_element(r.sizes.begin(), r.sizes.end()));
  }
}

TEST_CASE("clustering examples") {
  const Graph triangle = from_edges(3, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(local_clustering(triangle, 0) == 1.0);
  CHECK(global_clustering(triangle) == 1.0);

  const Graph star = from_edges(4, {{3, 0}, {3, 1}, {3, 2}});
  CHECK(local_clustering(star, 3) == 0.0);
  CHECK(local_clustering(star, 0) == 0.0);  // degree 1

  CHECK(global_clustering(from_edges(3, {{0, 1}, {1, 2}})) == 0.0);

  // square ABCD plus diagonal AC: 2 triangles, 8 triplets
  const Graph sq = from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}});
  CHECK(global_clustering(sq) == 0.75);

  CHECK(global_clustering(Graph(5)) == 0.0);
}

TEST_CASE("clustering is 1 on complete graphs and 0 on trees") {
  for (std::size_t n : {3u, 5u, 9u}) {
    CHECK(global_clustering(complete(n)) == 1.0);
    CHECK(mean_local_clustering(complete(n)) == 1.0);
  }
  Rng rng(4);
  for (int t = 0; t < 10; ++t) {
    // random recursive tree
    Graph tree(30);
    for (NodeId v = 1; v < 30; ++v) tree.add_edge(static_cast<NodeId>(rng.below(v)), v);
    CHECK(global_clustering(tree) == 0.0);
    CHECK(mean_local_clustering(tree) == 0.0);
  }
}

TEST_CASE("average path length examples") {
  CHECK(*average_path_length(from_edges(3, {{0, 1}, {1, 2}})) == doctest::Approx(4.0 / 3.0));
  CHECK(*average_path_length(from_edges(4, {{0, 1}, {2, 3}})) == 1.0);
  CHECK(*average_path_length(complete(4)) == 1.0);
  CHECK_FALSE(average_path_length(Graph(4)).has_value());
}

TEST_CASE("metrics agree with brute-force oracles on random graphs") {
  Rng rng(77);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 2 + rng.below(49);
    const double p = rng.unit() * 0.2;
    const Graph g = oracle::coin_flip_graph(n, p, rng);
    const StateMatrix s = init_states(n, 3, 3, rng);

    CHECK(as_int(components(g).labels) == oracle::component_labels(g));
    CHECK(as_int(domains(g, s).labels) == oracle::domain_labels(g, s));
    CHECK(std::abs(global_clustering(g) - oracle::global_clustering(g)) <= 1e-12);
    for (NodeId i = 0; i < n; ++i) CHECK(std::abs(local_clustering(g, i) - oracle::local_clustering(g, i)) <= 1e-12);
    const auto apl = average_path_length(g);
    const auto expected = oracle::average_path_length(g);
    REQUIRE(apl.has_value() == expected.has_value());
    if (apl) CHECK(std::abs(*apl - *expected) <= 1e-12);
  }
}

TEST_CASE("domains refine components") {
  Rng rng(8);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph g = random_graph(50, rng.below(120), rng);
    const StateMatrix s = init_states(50, 2, 1 + static_cast<Trait>(rng.below(3)), rng);
    const auto comp = components(g);
    const auto dom = domains(g, s);
    CHECK(dom.count >= comp.count);
    std::vector<int> comp_of_domain(dom.count, -1);
    for (std::size_t i = 0; i < 50; ++i) {
      int& c = comp_of_domain[dom.labels[i]];
      if (c < 0) c = static_cast<int>(comp.labels[i]);
      CHECK(c == static_cast<int>(comp.labels[i]));
    }
  }
}

TEST_CASE("degree histogram") {
  const auto h = degree_histogram(from_edges(4, {{3, 0}, {3, 1}, {3, 2}}));
  CHECK(h.at(1) == 3);
  CHECK(h.at(3) == 1);
  CHECK(h.size() == 2);
}

TEST_CASE("metrics row layout") {
  MetricsReport r = measure(from_edges(3, {{0, 1}, {1, 2}, {0, 2}}), rows({{1}, {1}, {1}}));
  CHECK(format_metrics_row(r) == "3,3,1,3,1,3,1,1,1,,");
  r.stop_reason = StopReason::Frozen;
  r.steps = 42;
  CHECK(format_metrics_row(r) == "3,3,1,3,1,3,1,1,1,frozen,42");
  const MetricsReport empty = measure(Graph(2), rows({{1}, {2}}));
  CHECK(format_metrics_row(empty) == "2,0,2,1,2,1,0,0,,,");
}

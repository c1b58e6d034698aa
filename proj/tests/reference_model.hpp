// Naive reference implementation of the dynamics, used only as a test oracle.
//
// Written directly from the model rules with std::set adjacency and full
// rescans instead of incremental bookkeeping. It shares only the random
// stream and the documented draw order with the library, so identical seeds
// must give identical trajectories.

#ifndef LANGNET_TESTS_REFERENCE_MODEL_HPP
#define LANGNET_TESTS_REFERENCE_MODEL_HPP

#include <cmath>
#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "langnet/rng.hpp"

namespace reference {

enum class Rule { LocalUniform, LocalPreferential, GlobalUniform };

struct Params {
  int n = 50;
  double k = 4.0;
  int f = 3;
  int q = 2;
  Rule rule = Rule::LocalUniform;
  std::uint64_t max_steps = 0;  // 0 = 50000 n
  std::uint64_t window = 0;     // 0 = 10 n f
};

struct Outcome {
  std::vector<std::set<int>> adj;
  std::vector<std::vector<int>> sigma;
  std::uint64_t steps = 0;
  std::string stop;  // frozen | stalled | budget
  std::vector<std::pair<int, int>> edge_list() const {
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < static_cast<int>(adj.size()); ++u)
      for (int v : adj[u])
        if (u < v) e.emplace_back(u, v);
    return e;
  }
};

inline int count_same(const std::vector<int>& a, const std::vector<int>& b) {
  int m = 0;
  for (std::size_t t = 0; t < a.size(); ++t)
    if (a[t] == b[t]) ++m;
  return m;
}

inline Outcome simulate(const Params& p, std::uint64_t seed) {
  langnet::Rng rng(seed);
  Outcome o;
  o.adj.resize(p.n);

  // G(N,M) by Floyd's subset sampling over pair indices v(v-1)/2 + u.
  const std::uint64_t pairs = static_cast<std::uint64_t>(p.n) * (p.n - 1) / 2;
  const auto m = static_cast<std::uint64_t>(std::llround(p.n * p.k / 2.0));
  std::set<std::uint64_t> chosen;
  for (std::uint64_t t = pairs - m; t < pairs; ++t) {
    std::uint64_t pick = rng.below(t + 1);
    chosen.insert(chosen.count(pick) ? t : pick);
  }
  for (std::uint64_t idx : chosen) {
    int v = 1;
    while (static_cast<std::uint64_t>(v) * (v + 1) / 2 <= idx) ++v;
    int u = static_cast<int>(idx - static_cast<std::uint64_t>(v) * (v - 1) / 2);
    o.adj[u].insert(v);
    o.adj[v].insert(u);
  }

  o.sigma.assign(p.n, std::vector<int>(p.f));
  for (int i = 0; i < p.n; ++i)
    for (int t = 0; t < p.f; ++t) o.sigma[i][t] = 1 + static_cast<int>(rng.below(p.q));

  const std::uint64_t budget = p.max_steps ? p.max_steps : 50000ULL * p.n;
  const std::uint64_t window = p.window ? p.window : 10ULL * p.n * p.f;

  auto scan = [&](bool& any_partial, bool& any_disjoint) {
    any_partial = any_disjoint = false;
    for (int u = 0; u < p.n; ++u)
      for (int v : o.adj[u]) {
        if (v < u) continue;
        int same = count_same(o.sigma[u], o.sigma[v]);
        if (same == 0) any_disjoint = true;
        else if (same < p.f) any_partial = true;
      }
  };

  bool partial = false, disjoint = false;
  scan(partial, disjoint);
  std::uint64_t quiet = 0;
  for (;;) {
    if (!partial && !disjoint) { o.stop = "frozen"; return o; }
    if (quiet >= window) { o.stop = "stalled"; return o; }
    if (o.steps >= budget) { o.stop = "budget"; return o; }

    ++o.steps;
    bool changed = false, imitated = false;
    int i = static_cast<int>(rng.below(p.n));
    if (!o.adj[i].empty()) {
      std::vector<int> nb(o.adj[i].begin(), o.adj[i].end());
      int j = nb[rng.below(nb.size())];
      int same = count_same(o.sigma[i], o.sigma[j]);
      if (same == 0) {
        std::vector<int> cand;
        if (p.rule == Rule::GlobalUniform) {
          if (static_cast<int>(o.adj[i].size()) < p.n - 1) {
            for (;;) {
              int l = static_cast<int>(rng.below(p.n));
              if (l != i && !o.adj[i].count(l)) { cand.push_back(l); break; }
            }
          }
        } else {
          std::set<int> two;
          for (int a : o.adj[i])
            for (int b : o.adj[a])
              if (b != i && !o.adj[i].count(b)) two.insert(b);
          std::vector<int> all(two.begin(), two.end());
          if (!all.empty()) {
            if (p.rule == Rule::LocalUniform) {
              cand.push_back(all[rng.below(all.size())]);
            } else {
              std::uint64_t total = 0;
              for (int l : all) total += (o.adj[l].size() + 1) * (o.adj[l].size() + 1);
              std::uint64_t ticket = rng.below(total);
              for (int l : all) {
                std::uint64_t w = (o.adj[l].size() + 1) * (o.adj[l].size() + 1);
                if (ticket < w) { cand.push_back(l); break; }
                ticket -= w;
              }
            }
          }
        }
        if (!cand.empty()) {
          int l = cand.front();
          o.adj[i].erase(j);
          o.adj[j].erase(i);
          o.adj[i].insert(l);
          o.adj[l].insert(i);
          changed = true;
        }
      } else if (same < p.f) {
        if (static_cast<int>(rng.below(p.f)) < same) {
          std::vector<int> differing;
          for (int t = 0; t < p.f; ++t)
            if (o.sigma[i][t] != o.sigma[j][t]) differing.push_back(t);
          int t = differing[rng.below(differing.size())];
          o.sigma[i][t] = o.sigma[j][t];
          changed = imitated = true;
        }
      }
    }
    if (changed) scan(partial, disjoint);
    quiet = (imitated || partial) ? 0 : quiet + 1;
  }
}

}  // namespace reference

#endif  // LANGNET_TESTS_REFERENCE_MODEL_HPP

#pragma once

// Test-only oracles. Each one deliberately takes a different algorithmic
// route than the library code it checks: boolean Floyd-Warshall instead of
// BFS or Tarjan, exhaustive subset or path enumeration instead of flows and
// binary searches, relaxation sweeps instead of queues.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <random>
#include <vector>

#include "ammd/digraph.hpp"
#include "ammd/metric_space.hpp"
#include "ammd/random_util.hpp"

namespace oracle {

// ---------------------------------------------------------------- reachability

inline std::vector<std::vector<bool>> reachability_matrix(const ammd::digraph& g) {
  const int n = g.vertex_count();
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (int u = 0; u < n; ++u)
    for (int v : g.out(u)) reach[u][v] = true;
  for (int w = 0; w < n; ++w)
    for (int u = 0; u < n; ++u) {
      if (!reach[u][w]) continue;
      for (int v = 0; v < n; ++v)
        if (reach[w][v]) reach[u][v] = true;
    }
  return reach;
}

// Mutual-reachability equivalence classes, labeled by smallest member.
inline std::vector<int> scc_labels(const ammd::digraph& g) {
  auto reach = reachability_matrix(g);
  const int n = g.vertex_count();
  std::vector<int> label(n, -1);
  for (int u = 0; u < n; ++u) {
    if (label[u] >= 0) continue;
    label[u] = u;
    for (int v = u + 1; v < n; ++v)
      if (reach[u][v] && reach[v][u]) label[v] = u;
  }
  return label;
}

// Unweighted hop distances by |V| relaxation sweeps.
inline std::vector<std::vector<int>> hop_distances(const ammd::digraph& g) {
  const int n = g.vertex_count();
  const int inf = std::numeric_limits<int>::max() / 2;
  std::vector<std::vector<int>> dist(n, std::vector<int>(n, inf));
  for (int v = 0; v < n; ++v) dist[v][v] = 0;
  for (int round = 0; round < n; ++round)
    for (int u = 0; u < n; ++u)
      for (int v : g.out(u))
        for (int s = 0; s < n; ++s)
          if (dist[s][u] + 1 < dist[s][v]) dist[s][v] = dist[s][u] + 1;
  return dist;
}

// ------------------------------------------------------------- subset search

// Calls f(members) for every k-subset of {0..n-1}.
template <class F>
void for_each_subset(int n, int k, F&& f) {
  std::vector<int> pick(k);
  for (int i = 0; i < k; ++i) pick[i] = i;
  while (true) {
    f(pick);
    int i = k - 1;
    while (i >= 0 && pick[i] == n - k + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
}

template <class Value>
Value brute_force_optimum(const ammd::basic_distance_matrix<Value>& d, int k) {
  Value best{};
  bool have = false;
  for_each_subset(d.size(), k, [&](const std::vector<int>& s) {
    Value score = ammd::diversity<Value>(d, s);
    if (!have || score > best) {
      best = score;
      have = true;
    }
  });
  return best;
}

template <class Value>
std::vector<std::vector<int>> all_optimal_sets(const ammd::basic_distance_matrix<Value>& d, int k,
                                               Value optimum) {
  std::vector<std::vector<int>> out;
  for_each_subset(d.size(), k, [&](const std::vector<int>& s) {
    if (ammd::diversity<Value>(d, s) == optimum) out.push_back(s);
  });
  return out;
}

inline std::size_t brute_force_max_antichain(const ammd::digraph& g) {
  auto reach = reachability_matrix(g);
  const int n = g.vertex_count();
  std::size_t best = 0;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    bool ok = true;
    for (int u = 0; u < n && ok; ++u) {
      if (!(mask >> u & 1)) continue;
      for (int v = 0; v < n && ok; ++v) {
        if (u == v || !(mask >> v & 1)) continue;
        if (reach[u][v]) ok = false;
      }
    }
    if (ok) best = std::max<std::size_t>(best, static_cast<std::size_t>(__builtin_popcount(mask)));
  }
  return best;
}

inline bool brute_force_has_clique(const std::vector<std::vector<bool>>& adj, int k) {
  const int n = static_cast<int>(adj.size());
  bool found = false;
  for_each_subset(n, k, [&](const std::vector<int>& s) {
    if (found) return;
    for (std::size_t a = 0; a < s.size(); ++a)
      for (std::size_t b = a + 1; b < s.size(); ++b)
        if (!adj[s[a]][s[b]]) return;
    found = true;
  });
  return found;
}

// --------------------------------------------------------------- path covers

// All simple paths of a DAG (walks cannot repeat vertices there), as vertex
// masks, then a DP over covered masks. Minimum number of paths covering all
// vertices; equals the minimum flow of the demand network.
inline int min_path_cover(const ammd::digraph& dag) {
  const int n = dag.vertex_count();
  std::vector<std::uint32_t> paths;
  std::vector<int> stack;
  auto dfs = [&](auto&& self, int v, std::uint32_t mask) -> void {
    paths.push_back(mask);
    for (int w : dag.out(v)) self(self, w, mask | (1u << w));
  };
  for (int v = 0; v < n; ++v) dfs(dfs, v, 1u << v);

  const std::uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1);
  const int inf = std::numeric_limits<int>::max() / 2;
  std::vector<int> dp(full + 1, inf);
  dp[0] = 0;
  for (std::uint32_t mask = 0; mask <= full; ++mask) {
    if (dp[mask] == inf) continue;
    for (std::uint32_t p : paths)
      if (dp[mask | p] > dp[mask] + 1) dp[mask | p] = dp[mask] + 1;
    if (mask == full) break;
  }
  return dp[full];
}

// Exhaustive simple-path enumeration; the oracle for metric closure values.
template <class Value>
std::vector<std::vector<Value>> shortest_paths_by_enumeration(
    const ammd::weighted_digraph<Value>& g) {
  const int n = g.n;
  const Value inf = std::numeric_limits<Value>::max();
  std::vector<std::vector<Value>> best(n, std::vector<Value>(n, inf));
  std::vector<std::vector<std::pair<int, Value>>> adj(n);
  for (const auto& a : g.arcs)
    if (a.from != a.to) adj[a.from].emplace_back(a.to, a.weight);

  std::vector<bool> used(n, false);
  auto dfs = [&](auto&& self, int src, int v, Value cost) -> void {
    if (cost < best[src][v]) best[src][v] = cost;
    for (auto [w, wt] : adj[v])
      if (!used[w]) {
        used[w] = true;
        self(self, src, w, cost + wt);
        used[w] = false;
      }
  };
  for (int src = 0; src < n; ++src) {
    std::fill(used.begin(), used.end(), false);
    used[src] = true;
    dfs(dfs, src, src, Value{});
  }
  return best;
}

// ----------------------------------------------------------------- generators

inline ammd::digraph random_digraph(int n, int per_mille, std::mt19937_64& rng) {
  ammd::digraph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v && ammd::detail::draw_below(rng, 1000) < static_cast<std::uint64_t>(per_mille))
        g.add_arc(u, v);
  return g;
}

inline ammd::digraph random_dag(int n, int per_mille, std::mt19937_64& rng) {
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  for (int i = n - 1; i > 0; --i) {
    int j = static_cast<int>(ammd::detail::draw_below(rng, static_cast<std::uint64_t>(i + 1)));
    std::swap(perm[i], perm[j]);
  }
  ammd::digraph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (ammd::detail::draw_below(rng, 1000) < static_cast<std::uint64_t>(per_mille))
        g.add_arc(perm[u], perm[v]);
  return g;
}

// Pseudometric with epsilon-bounded asymmetry: a symmetric metric plus a
// potential offset per vertex. d(u,v) = s(u,v) + a(u) - a(v) keeps the
// triangle inequality for any potentials; capping the potential spread at
// s_min * eps/(2+eps) caps the asymmetry ratio at eps.
inline ammd::distance_matrix eps_symmetric_instance(int n, std::int64_t eps_num,
                                                    std::int64_t eps_den, std::mt19937_64& rng) {
  ammd::weighted_digraph<std::int64_t> g;
  g.n = n;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      std::int64_t w = 30 * (1 + static_cast<std::int64_t>(ammd::detail::draw_below(rng, 20)));
      g.arcs.push_back({u, v, w});
      g.arcs.push_back({v, u, w});
    }
  ammd::distance_matrix s = ammd::metric_closure(g);

  std::int64_t s_min = std::numeric_limits<std::int64_t>::max();
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v) s_min = std::min(s_min, s(u, v));

  const std::int64_t spread = s_min * eps_num / (2 * eps_den + eps_num);
  std::vector<std::int64_t> potential(n, 0);
  for (int u = 0; u < n; ++u)
    potential[u] = static_cast<std::int64_t>(ammd::detail::draw_below(rng, static_cast<std::uint64_t>(spread + 1)));

  ammd::distance_matrix d(n);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v) d.at(u, v) = s(u, v) + potential[u] - potential[v];
  return d;
}

// The adversarial 5-point instance: six zero arcs into the last two points,
// every other pair at distance r.
inline ammd::distance_matrix star_gap_instance(std::int64_t r) {
  ammd::distance_matrix d(5);
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j)
      if (i != j) d.at(i, j) = r;
  for (int i = 0; i <= 2; ++i)
    for (int j = 3; j <= 4; ++j) d.at(i, j) = 0;
  return d;
}

// Three points where greedy started at z is exactly a third of optimal:
// d(x,y)=d(y,x)=6, d(x,z)=d(y,z)=2, d(z,x)=d(z,y)=4 (epsilon = 1).
inline ammd::distance_matrix tight_greedy_instance() {
  ammd::distance_matrix d(3);
  d.at(0, 1) = d.at(1, 0) = 6;
  d.at(0, 2) = d.at(1, 2) = 2;
  d.at(2, 0) = d.at(2, 1) = 4;
  return d;
}

}  // namespace oracle

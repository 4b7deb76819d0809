#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "ammd/antichain.hpp"
#include "ammd/digraph.hpp"
#include "ammd/metric_space.hpp"
#include "ammd/random_util.hpp"

namespace ammd {

/// Center selection for the ball-cover clustering: farthest-first seeds with
/// an endpoint of a maximum d_min edge and then picks the unmarked point
/// farthest from the chosen centers; first-unmarked takes the smallest
/// unmarked id.
enum class center_rule { farthest_first, first_unmarked };

struct start_rule {
  enum class kind_t { max_edge, fixed };
  kind_t kind = kind_t::max_edge;
  int vertex = 0;

  static start_rule max_edge() { return {}; }
  static start_rule fixed(int v) { return {kind_t::fixed, v}; }
};

enum class ma_mode { scan, binary };

struct solver_stats {
  long cluster_calls = 0;
  long extract_calls = 0;
  long antichain_calls = 0;
  long clique_calls = 0;
};

template <class Value>
struct solver_result {
  std::string algorithm;
  std::vector<int> solution;  // ascending vertex indices into the matrix
  Value score{};
  std::optional<double> radius_used;  // clustering radius R, when applicable
  std::optional<double> cutoff_used;  // threshold sigma, when applicable
  double elapsed_ms = 0.0;
  bool feasible = false;
  bool timed_out = false;
  std::optional<Value> refuted_above;  // smallest R proved infeasible before a timeout
  solver_stats stats;
};

struct cluster_outcome {
  std::vector<int> centers;    // in selection order
  std::vector<int> assignment;  // vertex -> cluster index
};

/// Finds any clique of k vertices in an undirected graph, exactly.
class undirected_graph {
 public:
  explicit undirected_graph(int n)
      : n_(n), words_((n + 63) / 64), bits_(static_cast<std::size_t>(n) * static_cast<std::size_t>(words_), 0) {}

  int size() const { return n_; }
  int words() const { return words_; }

  void add_edge(int u, int v) {
    if (u == v) return;
    set_bit(u, v);
    set_bit(v, u);
  }
  bool has_edge(int u, int v) const {
    return (row(u)[static_cast<std::size_t>(v / 64)] >> (v % 64)) & 1u;
  }
  const std::uint64_t* row(int v) const {
    return bits_.data() + static_cast<std::size_t>(v) * static_cast<std::size_t>(words_);
  }

 private:
  void set_bit(int u, int v) {
    bits_[static_cast<std::size_t>(u) * static_cast<std::size_t>(words_) + static_cast<std::size_t>(v / 64)] |=
        std::uint64_t{1} << (v % 64);
  }

  int n_, words_;
  std::vector<std::uint64_t> bits_;
};

struct clique_search {
  enum class status { found, none, timed_out };
  status outcome = status::none;
  std::vector<int> clique;  // ascending when found
};

/// Branch-and-bound with greedy-coloring upper bounds and degree pruning.
/// Deterministic; stops early against the optional deadline.
clique_search k_clique(const undirected_graph& g, int k,
                       std::optional<std::chrono::steady_clock::time_point> deadline = {});

namespace detail {

inline double ms_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

template <class Value>
void require_k(const basic_distance_matrix<Value>& d, int k) {
  if (k < 2 || k > d.size()) throw std::invalid_argument("solver: k must satisfy 2 <= k <= n");
}

/// Lexicographically first ordered pair (i < j) maximizing d_min.
template <class Value>
std::pair<int, int> max_dmin_pair(const basic_distance_matrix<Value>& d, std::span<const int> pool) {
  std::pair<int, int> best{pool[0], pool[0]};
  Value best_val{};
  bool have = false;
  for (std::size_t a = 0; a < pool.size(); ++a)
    for (std::size_t b = a + 1; b < pool.size(); ++b) {
      Value v = d_min(d, pool[a], pool[b]);
      if (!have || v > best_val) {
        have = true;
        best_val = v;
        best = {pool[a], pool[b]};
      }
    }
  return best;
}

/// Farthest-first selection of k points from a pool under d_min, seeded with
/// both endpoints of the pool's maximum d_min pair. Ties resolve to the
/// smallest vertex id.
template <class Value>
std::vector<int> farthest_first_subset(const basic_distance_matrix<Value>& d, std::span<const int> pool,
                                       int k) {
  if (static_cast<int>(pool.size()) <= k) return {pool.begin(), pool.end()};
  auto [a, b] = max_dmin_pair(d, pool);
  std::vector<int> chosen{a, b};
  std::vector<Value> dist(pool.size());
  std::vector<bool> used(pool.size(), false);
  for (std::size_t i = 0; i < pool.size(); ++i) {
    if (pool[i] == a || pool[i] == b) used[i] = true;
    dist[i] = std::min(d_min(d, pool[i], a), d_min(d, pool[i], b));
  }
  while (static_cast<int>(chosen.size()) < k) {
    std::size_t best = pool.size();
    for (std::size_t i = 0; i < pool.size(); ++i)
      if (!used[i] && (best == pool.size() || dist[i] > dist[best])) best = i;
    used[best] = true;
    chosen.push_back(pool[best]);
    for (std::size_t i = 0; i < pool.size(); ++i)
      dist[i] = std::min(dist[i], d_min(d, pool[i], pool[best]));
  }
  return chosen;
}

/// Degenerate instances (every distance zero, or no candidate radius ever
/// admits a feasible extraction, which forces the optimum to zero) resolve
/// to the first k vertices.
template <class Value>
solver_result<Value> first_k_result(const basic_distance_matrix<Value>& d, int k, std::string name) {
  solver_result<Value> r;
  r.algorithm = std::move(name);
  r.solution.resize(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) r.solution[static_cast<std::size_t>(i)] = i;
  r.score = diversity(d, r.solution);
  r.feasible = true;
  return r;
}

}  // namespace detail

/// Greedy ball cover under d_max: repeatedly pick a center, absorb every
/// unmarked point strictly within R of it, and continue until all points are
/// marked. Distinct centers end up with pairwise d_max at least R.
template <class Value>
cluster_outcome cluster_maxball(const basic_distance_matrix<Value>& d, Value radius,
                                center_rule rule = center_rule::farthest_first) {
  if (!(radius > Value{})) throw std::invalid_argument("cluster_maxball: radius must be positive");
  const int n = d.size();
  cluster_outcome out;
  out.assignment.assign(static_cast<std::size_t>(n), -1);

  std::vector<bool> marked(static_cast<std::size_t>(n), false);
  std::vector<Value> dist_to_centers;
  int next = 0;
  if (rule == center_rule::farthest_first && n > 1) {
    std::vector<int> all(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) all[static_cast<std::size_t>(i)] = i;
    next = detail::max_dmin_pair(d, all).first;
    dist_to_centers.assign(static_cast<std::size_t>(n), Value{});
  }

  int marked_count = 0;
  while (marked_count < n) {
    const int c = next;
    const int t = static_cast<int>(out.centers.size());
    out.centers.push_back(c);
    for (int v = 0; v < n; ++v)
      if (!marked[static_cast<std::size_t>(v)] && d_max(d, c, v) < radius) {
        marked[static_cast<std::size_t>(v)] = true;
        out.assignment[static_cast<std::size_t>(v)] = t;
        ++marked_count;
      }
    if (marked_count >= n) break;

    if (rule == center_rule::first_unmarked) {
      for (int v = 0; v < n; ++v)
        if (!marked[static_cast<std::size_t>(v)]) {
          next = v;
          break;
        }
    } else {
      for (int v = 0; v < n; ++v) {
        Value dv = d_min(d, v, c);
        if (t == 0 || dv < dist_to_centers[static_cast<std::size_t>(v)])
          dist_to_centers[static_cast<std::size_t>(v)] = dv;
      }
      int best = -1;
      for (int v = 0; v < n; ++v)
        if (!marked[static_cast<std::size_t>(v)] &&
            (best < 0 || dist_to_centers[static_cast<std::size_t>(v)] > dist_to_centers[static_cast<std::size_t>(best)]))
          best = v;
      next = best;
    }
  }
  return out;
}

/// Candidate extraction: build the threshold digraph over the given points,
/// then collect an independent set per weakly connected component from the
/// best of three certificates (chordless cycle, maximum antichain of the
/// condensation, odd positions of a short shortest path). Infeasible when
/// fewer than k independent points are found; otherwise returns k of them
/// chosen farthest-first under d_min.
template <class Value>
solver_result<Value> extract_candidate_set(const basic_distance_matrix<Value>& d,
                                           std::span<const int> points, cutoff<Value> sigma, int k,
                                           solver_stats* stats = nullptr) {
  if (!(sigma.num > Value{})) throw std::invalid_argument("extract: threshold must be positive");
  if (k < 2) throw std::invalid_argument("extract: k must be at least 2");
  const auto start = std::chrono::steady_clock::now();
  if (stats) ++stats->extract_calls;

  solver_result<Value> result;
  result.algorithm = "extract";
  result.cutoff_used = sigma.value();

  threshold_digraph<Value> t = build_threshold_digraph(d, points, sigma);
  std::vector<int> independent;

  for (const auto& comp : weak_components(t.graph)) {
    const int cn = static_cast<int>(comp.size());
    std::vector<int> local(static_cast<std::size_t>(t.graph.vertex_count()), -1);
    for (int i = 0; i < cn; ++i) local[static_cast<std::size_t>(comp[static_cast<std::size_t>(i)])] = i;
    digraph sub(cn);
    for (int i = 0; i < cn; ++i)
      for (int w : t.graph.out(comp[static_cast<std::size_t>(i)]))
        sub.add_arc(i, local[static_cast<std::size_t>(w)]);

    condensation cond = scc_condensation(sub);
    bool cyclic = false;
    for (const auto& members : cond.members)
      if (members.size() > 1) cyclic = true;

    std::optional<cycle_path> cyc;
    if (cyclic) cyc = find_chordless_cycle(sub);

    antichain_result ma = max_antichain(cond.dag);
    if (stats) ++stats->antichain_calls;
    cycle_path path = find_short_path(cond.dag, 2 * k - 1);

    const int c_len = cyc ? cyc->length() : 0;
    const int m_len = static_cast<int>(ma.size());
    const int l_len = path.length();

    auto rep = [&](int node) {  // smallest member of a condensation node
      return comp[static_cast<std::size_t>(cond.members[static_cast<std::size_t>(node)].front())];
    };

    std::vector<int> picked;
    if (cyc && c_len >= 2 * m_len - 1 && c_len >= l_len) {
      // Odd cycle positions, stopping before the wrap-around makes the last
      // pick adjacent to the first: floor(|C|/2) points.
      for (int i = 0; i < c_len / 2; ++i)
        picked.push_back(comp[static_cast<std::size_t>(cyc->vertices[static_cast<std::size_t>(2 * i)])]);
    } else if (2 * m_len - 1 >= l_len) {
      for (int node : ma.members) picked.push_back(rep(node));
    } else {
      for (int i = 0; i < l_len; i += 2) picked.push_back(rep(path.vertices[static_cast<std::size_t>(i)]));
    }
    for (int g_local : picked) independent.push_back(t.vertices[static_cast<std::size_t>(g_local)]);
  }

  if (static_cast<int>(independent.size()) < k) {
    result.feasible = false;
    result.elapsed_ms = detail::ms_since(start);
    return result;
  }

  result.solution = detail::farthest_first_subset(d, independent, k);
  std::sort(result.solution.begin(), result.solution.end());
  result.score = diversity(d, result.solution);
  result.feasible = true;
  result.elapsed_ms = detail::ms_since(start);
  return result;
}

/// Greedy selection under d_min. The default start rule picks an endpoint of
/// a maximum d_min edge; fixed starts reproduce adversarial cases.
template <class Value>
solver_result<Value> greedy_dmin(const basic_distance_matrix<Value>& d, int k,
                                 start_rule rule = start_rule::max_edge()) {
  detail::require_k(d, k);
  const auto start_time = std::chrono::steady_clock::now();
  const int n = d.size();

  int start = 0;
  if (rule.kind == start_rule::kind_t::fixed) {
    if (rule.vertex < 0 || rule.vertex >= n)
      throw std::invalid_argument("greedy_dmin: fixed start vertex out of range");
    start = rule.vertex;
  } else {
    std::vector<int> all(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) all[static_cast<std::size_t>(i)] = i;
    start = detail::max_dmin_pair(d, all).first;
  }

  std::vector<bool> chosen(static_cast<std::size_t>(n), false);
  std::vector<Value> dist(static_cast<std::size_t>(n));
  std::vector<int> solution{start};
  chosen[static_cast<std::size_t>(start)] = true;
  for (int v = 0; v < n; ++v) dist[static_cast<std::size_t>(v)] = d_min(d, v, start);

  while (static_cast<int>(solution.size()) < k) {
    int best = -1;
    for (int v = 0; v < n; ++v)
      if (!chosen[static_cast<std::size_t>(v)] &&
          (best < 0 || dist[static_cast<std::size_t>(v)] > dist[static_cast<std::size_t>(best)]))
        best = v;
    chosen[static_cast<std::size_t>(best)] = true;
    solution.push_back(best);
    for (int v = 0; v < n; ++v)
      dist[static_cast<std::size_t>(v)] = std::min(dist[static_cast<std::size_t>(v)], d_min(d, v, best));
  }

  solver_result<Value> r;
  r.algorithm = "greedy";
  std::sort(solution.begin(), solution.end());
  r.solution = std::move(solution);
  r.score = diversity(d, r.solution);
  r.feasible = true;
  r.elapsed_ms = detail::ms_since(start_time);
  return r;
}

/// Best of `reps` uniform k-subsets. Deterministic for a fixed seed.
template <class Value>
solver_result<Value> random_baseline(const basic_distance_matrix<Value>& d, int k, int reps = 10,
                                     std::uint64_t seed = 0) {
  detail::require_k(d, k);
  if (reps < 1) throw std::invalid_argument("random_baseline: need at least one repetition");
  const auto start = std::chrono::steady_clock::now();
  const int n = d.size();
  std::mt19937_64 rng(seed);

  solver_result<Value> r;
  r.algorithm = "random";
  std::vector<int> idx(static_cast<std::size_t>(n));
  for (int rep = 0; rep < reps; ++rep) {
    for (int i = 0; i < n; ++i) idx[static_cast<std::size_t>(i)] = i;
    for (int i = 0; i < k; ++i) {
      int j = i + static_cast<int>(detail::draw_below(rng, static_cast<std::uint64_t>(n - i)));
      std::swap(idx[static_cast<std::size_t>(i)], idx[static_cast<std::size_t>(j)]);
    }
    std::vector<int> cand(idx.begin(), idx.begin() + k);
    std::sort(cand.begin(), cand.end());
    Value score = diversity(d, cand);
    if (rep == 0 || score > r.score) {
      r.score = score;
      r.solution = std::move(cand);
    }
  }
  r.feasible = true;
  r.elapsed_ms = detail::ms_since(start);
  return r;
}

namespace detail {

template <class Value>
void adopt_candidate(solver_result<Value>& best, const solver_result<Value>& cand, double radius) {
  if (!cand.feasible) return;
  if (best.feasible && cand.score <= best.score) return;  // ties keep the earlier (smaller R) result
  best.solution = cand.solution;
  best.score = cand.score;
  best.cutoff_used = cand.cutoff_used;
  best.radius_used = radius;
  best.feasible = true;
}

}  // namespace detail

/// Ball-and-antichain: for every candidate radius R (consecutive radii with
/// identical center sets are processed once), cluster, then extract at
/// threshold R/(2k). Returns the best feasible candidate.
template <class Value>
solver_result<Value> bac(const basic_distance_matrix<Value>& d, int k,
                         center_rule rule = center_rule::farthest_first) {
  detail::require_k(d, k);
  const auto start = std::chrono::steady_clock::now();

  solver_result<Value> best;
  best.algorithm = "bac";
  std::vector<int> prev_centers;
  bool have_prev = false;

  for (Value radius : unique_distances(d)) {
    auto clusters = cluster_maxball(d, radius, rule);
    ++best.stats.cluster_calls;
    std::vector<int> centers = clusters.centers;
    std::sort(centers.begin(), centers.end());
    if (have_prev && centers == prev_centers) continue;
    prev_centers = centers;
    have_prev = true;

    auto cand = extract_candidate_set(d, centers, cutoff<Value>{radius, 2LL * k}, k,
                                      &best.stats);
    detail::adopt_candidate(best, cand, static_cast<double>(radius));
  }

  if (!best.feasible) {
    auto stats = best.stats;
    best = detail::first_k_result(d, k, "bac");
    best.stats = stats;
  }
  best.elapsed_ms = detail::ms_since(start);
  return best;
}

/// bac plus a refinement pass: whenever the base extraction at R/(2k) is
/// feasible, binary search the distance values in (R/(2k), R] for the
/// largest threshold that still extracts k points.
template <class Value>
solver_result<Value> bacr(const basic_distance_matrix<Value>& d, int k,
                          center_rule rule = center_rule::farthest_first) {
  detail::require_k(d, k);
  const auto start = std::chrono::steady_clock::now();
  const std::vector<Value> uniq = unique_distances(d);

  solver_result<Value> best;
  best.algorithm = "bacr";
  std::vector<int> prev_centers;
  bool have_prev = false;

  for (std::size_t i = 0; i < uniq.size(); ++i) {
    const Value radius = uniq[i];
    auto clusters = cluster_maxball(d, radius, rule);
    ++best.stats.cluster_calls;
    std::vector<int> centers = clusters.centers;
    std::sort(centers.begin(), centers.end());
    if (have_prev && centers == prev_centers) continue;
    prev_centers = centers;
    have_prev = true;

    const cutoff<Value> base_cut{radius, 2LL * k};
    auto base = extract_candidate_set(d, centers, base_cut, k, &best.stats);
    detail::adopt_candidate(best, base, static_cast<double>(radius));
    if (!base.feasible) continue;

    auto first_above = std::partition_point(uniq.begin(), uniq.end(),
                                            [&](Value v) { return !base_cut.below(v); });
    long a = first_above - uniq.begin();
    long b = static_cast<long>(i);
    while (a <= b) {
      long t = (a + b) / 2;
      auto cand = extract_candidate_set(d, centers, cutoff<Value>::exact(uniq[static_cast<std::size_t>(t)]),
                                        k, &best.stats);
      detail::adopt_candidate(best, cand, static_cast<double>(radius));
      if (cand.feasible)
        a = t + 1;
      else
        b = t - 1;
    }
  }

  if (!best.feasible) {
    auto stats = best.stats;
    best = detail::first_k_result(d, k, "bacr");
    best.stats = stats;
  }
  best.elapsed_ms = detail::ms_since(start);
  return best;
}

/// Fast variant: binary search over the sorted radii for the largest one
/// whose base extraction is feasible (feasibility need not be monotone; the
/// search still lands at or above the radius the guarantee needs), then
/// refine the threshold for that radius as bacr does.
template <class Value>
solver_result<Value> bacf(const basic_distance_matrix<Value>& d, int k,
                          center_rule rule = center_rule::farthest_first) {
  detail::require_k(d, k);
  const auto start = std::chrono::steady_clock::now();
  const std::vector<Value> uniq = unique_distances(d);

  solver_result<Value> best;
  best.algorithm = "bacf";

  auto probe = [&](long t) {
    const Value radius = uniq[static_cast<std::size_t>(t)];
    auto clusters = cluster_maxball(d, radius, rule);
    ++best.stats.cluster_calls;
    std::vector<int> centers = clusters.centers;
    std::sort(centers.begin(), centers.end());
    auto cand = extract_candidate_set(d, centers, cutoff<Value>{radius, 2LL * k}, k,
                                      &best.stats);
    detail::adopt_candidate(best, cand, static_cast<double>(radius));
    return cand.feasible;
  };

  long lo = 0, hi = static_cast<long>(uniq.size()) - 1;
  while (lo <= hi) {
    long t = (lo + hi) / 2;
    if (probe(t))
      lo = t + 1;
    else
      hi = t - 1;
  }
  const long i = lo - 1;
  if (i < 0) {
    auto stats = best.stats;
    best = detail::first_k_result(d, k, "bacf");
    best.stats = stats;
    best.elapsed_ms = detail::ms_since(start);
    return best;
  }

  const Value radius = uniq[static_cast<std::size_t>(i)];
  auto clusters = cluster_maxball(d, radius, rule);
  ++best.stats.cluster_calls;
  std::vector<int> centers = clusters.centers;
  std::sort(centers.begin(), centers.end());

  const cutoff<Value> base_cut{radius, 2LL * k};
  auto first_above =
      std::partition_point(uniq.begin(), uniq.end(), [&](Value v) { return !base_cut.below(v); });
  long a = first_above - uniq.begin();
  long b = i;
  while (a <= b) {
    long t = (a + b) / 2;
    auto cand = extract_candidate_set(d, centers, cutoff<Value>::exact(uniq[static_cast<std::size_t>(t)]), k,
                                      &best.stats);
    detail::adopt_candidate(best, cand, static_cast<double>(radius));
    if (cand.feasible)
      a = t + 1;
    else
      b = t - 1;
  }

  best.elapsed_ms = detail::ms_since(start);
  return best;
}

/// Plain maximum-antichain method over the full point set with threshold
/// R/(n-k+1). Antichains are computed on the condensation, since arcs below
/// the threshold may form cycles; any member vertex represents its
/// component. Scan mode keeps the best score over all radii; binary mode
/// searches for the largest feasible radius (feasibility is monotone here
/// because arcs only accumulate as R grows).
template <class Value>
solver_result<Value> naive_ma(const basic_distance_matrix<Value>& d, int k, ma_mode mode = ma_mode::scan) {
  detail::require_k(d, k);
  const auto start = std::chrono::steady_clock::now();
  const int n = d.size();
  const std::int64_t den = n - k + 1;
  const std::vector<Value> uniq = unique_distances(d);

  solver_result<Value> best;
  best.algorithm = "naive-ma";

  std::vector<int> all(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) all[static_cast<std::size_t>(i)] = i;

  auto solve_radius = [&](Value radius) -> std::optional<std::vector<int>> {
    auto t = build_threshold_digraph(d, all, cutoff<Value>{radius, den});
    condensation cond = scc_condensation(t.graph);
    antichain_result ma = max_antichain(cond.dag);
    ++best.stats.antichain_calls;
    if (static_cast<int>(ma.size()) < k) return std::nullopt;
    std::vector<int> reps;
    reps.reserve(ma.size());
    for (int node : ma.members) reps.push_back(cond.members[static_cast<std::size_t>(node)].front());
    std::sort(reps.begin(), reps.end());
    reps.resize(static_cast<std::size_t>(k));
    return reps;
  };

  if (mode == ma_mode::scan) {
    for (Value radius : uniq) {
      auto sol = solve_radius(radius);
      if (!sol) continue;
      Value score = diversity(d, *sol);
      if (!best.feasible || score > best.score) {
        best.solution = std::move(*sol);
        best.score = score;
        best.feasible = true;
        best.radius_used = static_cast<double>(radius);
        best.cutoff_used = cutoff<Value>{radius, den}.value();
      }
    }
  } else {
    long lo = 0, hi = static_cast<long>(uniq.size()) - 1;
    while (lo <= hi) {
      long t = (lo + hi) / 2;
      auto sol = solve_radius(uniq[static_cast<std::size_t>(t)]);
      if (sol) {
        best.solution = std::move(*sol);
        best.score = diversity(d, best.solution);
        best.feasible = true;
        best.radius_used = static_cast<double>(uniq[static_cast<std::size_t>(t)]);
        best.cutoff_used = cutoff<Value>{uniq[static_cast<std::size_t>(t)], den}.value();
        lo = t + 1;
      } else {
        hi = t - 1;
      }
    }
  }

  if (!best.feasible) {
    auto stats = best.stats;
    best = detail::first_k_result(d, k, "naive-ma");
    best.stats = stats;
  }
  best.elapsed_ms = detail::ms_since(start);
  return best;
}

/// Exact optimum by binary searching the distance values for the largest R
/// whose mutual-distance graph (both directions at least R) has a k-clique.
/// An optional wall-clock budget turns the result into verified partial
/// bounds: the best clique found so far and the smallest refuted R.
template <class Value>
solver_result<Value> exact_optimum(const basic_distance_matrix<Value>& d, int k,
                                   std::optional<double> budget_seconds = {}) {
  detail::require_k(d, k);
  const auto start = std::chrono::steady_clock::now();
  const int n = d.size();
  const std::vector<Value> uniq = unique_distances(d);

  std::optional<std::chrono::steady_clock::time_point> deadline;
  if (budget_seconds)
    deadline = start + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                           std::chrono::duration<double>(*budget_seconds));

  solver_result<Value> best;
  best.algorithm = "exact";

  long lo = 0, hi = static_cast<long>(uniq.size()) - 1;
  long found_idx = -1;
  std::vector<int> found_clique;
  while (lo <= hi) {
    long t = (lo + hi) / 2;
    const Value radius = uniq[static_cast<std::size_t>(t)];
    undirected_graph g(n);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (d(i, j) >= radius && d(j, i) >= radius) g.add_edge(i, j);
    auto res = k_clique(g, k, deadline);
    ++best.stats.clique_calls;
    if (res.outcome == clique_search::status::timed_out) {
      best.timed_out = true;
      break;
    }
    if (res.outcome == clique_search::status::found) {
      found_idx = t;
      found_clique = std::move(res.clique);
      lo = t + 1;
    } else {
      if (!best.refuted_above || radius < *best.refuted_above) best.refuted_above = radius;
      hi = t - 1;
    }
  }

  if (found_idx >= 0) {
    best.solution = std::move(found_clique);
    std::sort(best.solution.begin(), best.solution.end());
    best.score = diversity(d, best.solution);
    best.radius_used = static_cast<double>(uniq[static_cast<std::size_t>(found_idx)]);
    best.feasible = true;
  } else if (!best.timed_out) {
    auto stats = best.stats;
    auto refuted = best.refuted_above;
    best = detail::first_k_result(d, k, "exact");
    best.stats = stats;
    best.refuted_above = refuted;
  }
  best.elapsed_ms = detail::ms_since(start);
  return best;
}

}  // namespace ammd

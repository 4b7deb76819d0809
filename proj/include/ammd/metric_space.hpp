#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <queue>
#include <span>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

#include "ammd/digraph.hpp"

namespace ammd {

/// Strict upper threshold num/den on distance values. Integral comparisons
/// are done by cross-multiplication in 128-bit so rational cutoffs such as
/// R/(2k) stay exact.
template <class Value>
struct cutoff {
  Value num{};
  std::int64_t den = 1;

  /// d < num/den
  bool admits(Value d) const {
    if constexpr (std::is_integral_v<Value>)
      return static_cast<__int128>(d) * den < static_cast<__int128>(num);
    else
      return d * static_cast<Value>(den) < num;
  }

  /// num/den < d
  bool below(Value d) const {
    if constexpr (std::is_integral_v<Value>)
      return static_cast<__int128>(num) < static_cast<__int128>(d) * den;
    else
      return num < d * static_cast<Value>(den);
  }

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }

  static cutoff exact(Value v) { return {v, 1}; }
};

/// Dense n-by-n table of directed distances with zero diagonal. Immutable in
/// spirit: algorithms only read it, so concurrent use needs no coordination.
template <class Value>
class basic_distance_matrix {
 public:
  using value_type = Value;

  basic_distance_matrix() = default;
  explicit basic_distance_matrix(int n)
      : n_(n), d_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), Value{}) {}
  basic_distance_matrix(int n, std::vector<Value> row_major) : n_(n), d_(std::move(row_major)) {
    if (d_.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n))
      throw std::invalid_argument("distance matrix: wrong number of entries");
  }

  int size() const { return n_; }

  Value operator()(int i, int j) const {
    return d_[static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j)];
  }
  Value& at(int i, int j) {
    return d_[static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j)];
  }

  bool has_labels() const { return !labels_.empty(); }
  void set_labels(std::vector<std::string> labels) {
    if (!labels.empty() && labels.size() != static_cast<std::size_t>(n_))
      throw std::invalid_argument("distance matrix: label count mismatch");
    labels_ = std::move(labels);
  }
  const std::vector<std::string>& labels() const { return labels_; }
  std::string label(int i) const {
    return labels_.empty() ? std::to_string(i) : labels_[static_cast<std::size_t>(i)];
  }

 private:
  int n_ = 0;
  std::vector<Value> d_;
  std::vector<std::string> labels_;
};

using distance_matrix = basic_distance_matrix<std::int64_t>;
using real_distance_matrix = basic_distance_matrix<double>;

template <class Value>
Value d_min(const basic_distance_matrix<Value>& d, int u, int v) {
  return std::min(d(u, v), d(v, u));
}

template <class Value>
Value d_max(const basic_distance_matrix<Value>& d, int u, int v) {
  return std::max(d(u, v), d(v, u));
}

/// Smallest directed distance over ordered pairs of distinct members.
template <class Value>
Value diversity(const basic_distance_matrix<Value>& d, std::span<const int> s) {
  if (s.size() < 2) throw std::invalid_argument("diversity: need at least two points");
  Value best = std::numeric_limits<Value>::max();
  for (int u : s)
    for (int v : s) {
      if (u == v) continue;
      best = std::min(best, d(u, v));
    }
  return best;
}

/// Strictly increasing list of the distinct positive entries.
template <class Value>
std::vector<Value> unique_distances(const basic_distance_matrix<Value>& d) {
  std::vector<Value> vals;
  const int n = d.size();
  vals.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (d(i, j) > Value{}) vals.push_back(d(i, j));
  std::sort(vals.begin(), vals.end());
  vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
  return vals;
}

/// Worst-case asymmetry ratio: the smallest eps with
/// (1+eps)*d_min(u,v) >= d_max(u,v) over all pairs, stored as the exact
/// fraction (d_max-d_min)/d_min of the worst pair. Unbounded when some pair
/// has d_min = 0 < d_max.
template <class Value>
struct epsilon_symmetry {
  bool unbounded = false;
  Value num{};
  Value den{1};

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

template <class Value>
struct triangle_violation {
  int i, w, j;
  Value slack;  // d(i,j) - d(i,w) - d(w,j), positive when violated
};

template <class Value>
struct validation_report {
  bool is_pseudometric = true;
  std::size_t violation_count = 0;  // total, including entries beyond the stored cap
  std::vector<triangle_violation<Value>> triangle_violations;
  std::vector<int> diagonal_violations;
  std::vector<std::pair<int, int>> negative_entries;
  epsilon_symmetry<Value> epsilon;
};

template <class Value>
validation_report<Value> validate_pseudometric(const basic_distance_matrix<Value>& d, Value tol = Value{}) {
  constexpr std::size_t record_cap = 64;
  const int n = d.size();
  if (n < 1) throw std::invalid_argument("validate_pseudometric: empty matrix");

  validation_report<Value> rep;
  for (int i = 0; i < n; ++i) {
    Value v = d(i, i);
    if (v > tol || v < -tol) {
      ++rep.violation_count;
      if (rep.diagonal_violations.size() < record_cap) rep.diagonal_violations.push_back(i);
    }
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (d(i, j) < -tol) {
        ++rep.violation_count;
        if (rep.negative_entries.size() < record_cap) rep.negative_entries.emplace_back(i, j);
      }

  for (int i = 0; i < n; ++i)
    for (int w = 0; w < n; ++w)
      for (int j = 0; j < n; ++j)
        if (d(i, j) > d(i, w) + d(w, j) + tol) {
          ++rep.violation_count;
          if (rep.triangle_violations.size() < record_cap)
            rep.triangle_violations.push_back({i, w, j, d(i, j) - d(i, w) - d(w, j)});
        }

  rep.is_pseudometric = rep.violation_count == 0;

  auto& eps = rep.epsilon;
  for (int i = 0; i < n && !eps.unbounded; ++i)
    for (int j = i + 1; j < n; ++j) {
      Value lo = d_min(d, i, j), hi = d_max(d, i, j);
      if (lo <= Value{}) {
        if (hi > Value{}) {
          eps.unbounded = true;
          break;
        }
        continue;
      }
      // (hi-lo)/lo > num/den ?
      bool larger;
      if constexpr (std::is_integral_v<Value>)
        larger = static_cast<__int128>(hi - lo) * eps.den > static_cast<__int128>(eps.num) * lo;
      else
        larger = (hi - lo) * eps.den > eps.num * lo;
      if (larger) {
        eps.num = hi - lo;
        eps.den = lo;
      }
    }
  return rep;
}

/// Arc-weighted digraph, the raw form of edge-list datasets. Vertex labels
/// are carried along so solutions can be reported in the input's own ids.
template <class Value>
struct weighted_digraph {
  struct arc {
    int from, to;
    Value weight;
  };

  int n = 0;
  std::vector<arc> arcs;
  std::vector<std::string> labels;
};

/// Shortest-path distances within the largest strongly connected component
/// (ties broken by the smallest member vertex id). The result satisfies the
/// directed triangle inequality by construction.
template <class Value>
basic_distance_matrix<Value> metric_closure(const weighted_digraph<Value>& w) {
  if (w.n <= 0) throw std::invalid_argument("metric_closure: empty digraph");
  Value max_weight{};
  for (const auto& a : w.arcs) {
    if (a.weight < Value{}) throw std::invalid_argument("metric_closure: negative arc weight");
    max_weight = std::max(max_weight, a.weight);
  }
  if constexpr (std::is_integral_v<Value>) {
    const Value limit = std::numeric_limits<Value>::max() / 4;
    if (max_weight > 0 && static_cast<Value>(w.n) > limit / max_weight)
      throw std::overflow_error("metric_closure: path sums may overflow the distance type");
  }

  digraph structure(w.n);
  for (const auto& a : w.arcs) structure.add_arc(a.from, a.to);
  condensation scc = scc_condensation(structure);

  int best = 0;
  for (int c = 1; c < scc.component_count(); ++c) {
    const auto& cand = scc.members[static_cast<std::size_t>(c)];
    const auto& cur = scc.members[static_cast<std::size_t>(best)];
    if (cand.size() > cur.size() || (cand.size() == cur.size() && cand.front() < cur.front()))
      best = c;
  }
  const std::vector<int>& keep = scc.members[static_cast<std::size_t>(best)];
  const int m = static_cast<int>(keep.size());
  std::vector<int> local(static_cast<std::size_t>(w.n), -1);
  for (int i = 0; i < m; ++i) local[static_cast<std::size_t>(keep[static_cast<std::size_t>(i)])] = i;

  // Induced adjacency, parallel arcs resolved to the minimum weight.
  std::vector<std::vector<std::pair<int, Value>>> adj(static_cast<std::size_t>(m));
  {
    std::vector<std::vector<Value>> best_w(static_cast<std::size_t>(m));
    std::vector<std::vector<int>> best_to(static_cast<std::size_t>(m));
    for (const auto& a : w.arcs) {
      int u = local[static_cast<std::size_t>(a.from)], v = local[static_cast<std::size_t>(a.to)];
      if (u < 0 || v < 0 || u == v) continue;
      auto& tos = best_to[static_cast<std::size_t>(u)];
      auto& ws = best_w[static_cast<std::size_t>(u)];
      auto it = std::find(tos.begin(), tos.end(), v);
      if (it == tos.end()) {
        tos.push_back(v);
        ws.push_back(a.weight);
      } else {
        auto idx = static_cast<std::size_t>(it - tos.begin());
        ws[idx] = std::min(ws[idx], a.weight);
      }
    }
    for (int u = 0; u < m; ++u)
      for (std::size_t e = 0; e < best_to[static_cast<std::size_t>(u)].size(); ++e)
        adj[static_cast<std::size_t>(u)].emplace_back(best_to[static_cast<std::size_t>(u)][e],
                                                      best_w[static_cast<std::size_t>(u)][e]);
  }

  basic_distance_matrix<Value> out(m);
  const Value inf = std::numeric_limits<Value>::max();
  std::vector<Value> dist(static_cast<std::size_t>(m));
  using entry = std::pair<Value, int>;
  for (int src = 0; src < m; ++src) {
    std::fill(dist.begin(), dist.end(), inf);
    dist[static_cast<std::size_t>(src)] = Value{};
    std::priority_queue<entry, std::vector<entry>, std::greater<entry>> pq;
    pq.push({Value{}, src});
    while (!pq.empty()) {
      auto [du, u] = pq.top();
      pq.pop();
      if (du > dist[static_cast<std::size_t>(u)]) continue;
      for (auto [v, wt] : adj[static_cast<std::size_t>(u)]) {
        Value nd = du + wt;
        if (nd < dist[static_cast<std::size_t>(v)]) {
          dist[static_cast<std::size_t>(v)] = nd;
          pq.push({nd, v});
        }
      }
    }
    for (int v = 0; v < m; ++v) {
      if (dist[static_cast<std::size_t>(v)] == inf)
        throw std::logic_error("metric_closure: component not strongly connected");
      out.at(src, v) = dist[static_cast<std::size_t>(v)];
    }
  }

  if (!w.labels.empty()) {
    std::vector<std::string> kept;
    kept.reserve(static_cast<std::size_t>(m));
    for (int v : keep) kept.push_back(w.labels[static_cast<std::size_t>(v)]);
    out.set_labels(std::move(kept));
  }
  return out;
}

/// Digraph over a vertex subset with an arc (i,j) exactly when
/// d(vertices[i], vertices[j]) < sigma.
template <class Value>
struct threshold_digraph {
  std::vector<int> vertices;
  digraph graph;
  cutoff<Value> sigma;
};

template <class Value>
threshold_digraph<Value> build_threshold_digraph(const basic_distance_matrix<Value>& d,
                                                 std::span<const int> verts, cutoff<Value> sigma) {
  threshold_digraph<Value> t;
  t.vertices.assign(verts.begin(), verts.end());
  t.sigma = sigma;
  const int m = static_cast<int>(t.vertices.size());
  t.graph = digraph(m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (i != j && sigma.admits(d(t.vertices[static_cast<std::size_t>(i)],
                                   t.vertices[static_cast<std::size_t>(j)])))
        t.graph.add_arc(i, j);
  return t;
}

}  // namespace ammd

#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "ammd/digraph.hpp"

namespace ammd {

struct flow_arc {
  int tail, head;
  std::int64_t lower, capacity, flow;
};

/// Directed network with per-arc demands (lower bounds), capacities and an
/// integral flow assignment. Capacities use `unbounded` as a sentinel; any
/// value exceeding the total demand behaves identically.
class flow_network {
 public:
  static constexpr std::int64_t unbounded = std::numeric_limits<std::int64_t>::max() / 4;

  flow_network() = default;
  flow_network(int nodes, int source, int sink) : nodes_(nodes), source_(source), sink_(sink) {}

  int node_count() const { return nodes_; }
  int source() const { return source_; }
  int sink() const { return sink_; }

  int add_arc(int tail, int head, std::int64_t lower, std::int64_t capacity);

  std::size_t arc_count() const { return arcs_.size(); }
  const flow_arc& arc(std::size_t i) const { return arcs_[i]; }
  void set_flow(std::size_t i, std::int64_t f) { arcs_[i].flow = f; }

  /// Bounds respected on every arc and conservation at every node other
  /// than source and sink.
  bool flow_feasible() const;

  /// Net flow out of the source.
  std::int64_t flow_value() const;

 private:
  int nodes_ = 0;
  int source_ = -1;
  int sink_ = -1;
  std::vector<flow_arc> arcs_;
};

/// Exact integral maximum flow (Dinic). Requires all lower bounds zero;
/// deterministic for a fixed arc insertion order.
std::int64_t max_flow(flow_network& net, int s, int t);

/// Minimum feasible s-t flow under the arc demands. Starts from the current
/// flow assignment when it is already feasible (callers with structural
/// knowledge can seed one), otherwise derives a feasible flow through the
/// usual auxiliary max-flow construction. The minimum is then reached by
/// running max flow from t to s on the residual network, where an arc with
/// flow f, lower bound l and capacity c admits c-f forward and f-l backward.
/// Returns nothing when no feasible flow exists.
std::optional<std::int64_t> min_flow_with_demands(flow_network& net, int s, int t);

/// The flow form of the maximum-antichain problem: nodes {s, t} plus an
/// in/out pair per vertex, a demand-1 arc v_in -> v_out, and u_out -> v_in
/// for every DAG arc. 2n+2 nodes, 3n+m arcs. Rejects cyclic input.
flow_network build_ma_network(const digraph& dag);

struct antichain_result {
  std::vector<int> members;  // ascending
  /// Per-member pairwise-unreachability outcome; filled when
  /// self-verification is enabled, empty otherwise.
  std::vector<std::uint8_t> certificate;

  std::size_t size() const { return members.size(); }
};

/// Maximum-cardinality antichain of a DAG via the minimum-flow reduction.
/// The antichain is read off the residual network of the minimum flow: with
/// T the set of nodes residual-reachable from t, a vertex joins the result
/// exactly when its demand arc crosses from outside T into T.
antichain_result max_antichain(const digraph& dag);

/// Independent route for the same question: maximum matching on the
/// bipartite reachability graph of the transitive closure, antichain taken
/// as the complement of the Konig vertex cover. Intended for moderate n.
antichain_result max_antichain_oracle(const digraph& dag);

/// Maximum bipartite matching (Hopcroft-Karp). adj maps left vertices to
/// right neighbors. Optional outputs give the matched partner per side
/// (-1 when exposed).
int hopcroft_karp(const std::vector<std::vector<int>>& adj, int right_count,
                  std::vector<int>* match_left = nullptr, std::vector<int>* match_right = nullptr);

}  // namespace ammd

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace ammd {

/// Simple digraph over vertices 0..n-1. Adjacency lists are kept sorted and
/// duplicate-free; self-loops are ignored on insertion.
class digraph {
 public:
  digraph() = default;
  explicit digraph(int n) : adj_(static_cast<std::size_t>(n)) {}

  int vertex_count() const { return static_cast<int>(adj_.size()); }
  std::size_t arc_count() const;

  void add_arc(int u, int v);
  bool has_arc(int u, int v) const;
  const std::vector<int>& out(int u) const { return adj_[static_cast<std::size_t>(u)]; }

 private:
  std::vector<std::vector<int>> adj_;
};

/// Condensation of a digraph: one node per strongly connected component,
/// numbered in topological order (every dag arc goes from a lower to a
/// higher component index). Component member lists are sorted ascending.
struct condensation {
  digraph dag;
  std::vector<std::vector<int>> members;
  std::vector<int> comp_of;

  int component_count() const { return dag.vertex_count(); }
};

condensation scc_condensation(const digraph& g);

bool is_acyclic(const digraph& g);

/// A vertex sequence that is either a directed cycle (closing arc from the
/// last vertex back to the first) or a simple path.
struct cycle_path {
  std::vector<int> vertices;
  bool is_cycle = false;

  int length() const { return static_cast<int>(vertices.size()); }
};

/// Finds a chordless cycle, or nothing when the graph is acyclic. Starts
/// from an arbitrary cycle and repeatedly shortcuts across chords, scanning
/// in smallest-index-first order so the result is deterministic. A pair of
/// antiparallel arcs counts as a cycle of length 2.
std::optional<cycle_path> find_chordless_cycle(const digraph& g);

/// Unweighted shortest-path search over a DAG, one search tree per source.
/// Returns a path with exactly `target_len` vertices when some ordered pair
/// lies at that hop distance, otherwise a path realizing the maximum finite
/// hop distance. Ties go to the smallest source id, then target id.
cycle_path find_short_path(const digraph& dag, int target_len);

digraph transitive_closure(const digraph& g);

std::vector<std::vector<int>> weak_components(const digraph& g);

/// No arc between any two members, in either direction.
bool is_independent(const digraph& g, std::span<const int> s);

/// No path between any two distinct members (checked by per-member BFS).
bool is_antichain(const digraph& g, std::span<const int> s);

}  // namespace ammd

#include "ammd/digraph.hpp"

#include <algorithm>
#include <cassert>
#include <queue>
#include <stdexcept>

namespace ammd {

std::size_t digraph::arc_count() const {
  std::size_t m = 0;
  for (const auto& row : adj_) m += row.size();
  return m;
}

void digraph::add_arc(int u, int v) {
  if (u == v) return;
  auto& row = adj_[static_cast<std::size_t>(u)];
  auto it = std::lower_bound(row.begin(), row.end(), v);
  if (it == row.end() || *it != v) row.insert(it, v);
}

bool digraph::has_arc(int u, int v) const {
  const auto& row = adj_[static_cast<std::size_t>(u)];
  return std::binary_search(row.begin(), row.end(), v);
}

namespace {

// Iterative Tarjan. Components are emitted sinks-first, so reversing the
// emission index yields a topological numbering of the condensation.
struct tarjan_state {
  const digraph& g;
  std::vector<int> index, lowlink, comp;
  std::vector<bool> on_stack;
  std::vector<int> stack;
  int next_index = 0;
  int comp_count = 0;

  explicit tarjan_state(const digraph& graph)
      : g(graph),
        index(static_cast<std::size_t>(graph.vertex_count()), -1),
        lowlink(static_cast<std::size_t>(graph.vertex_count()), 0),
        comp(static_cast<std::size_t>(graph.vertex_count()), -1),
        on_stack(static_cast<std::size_t>(graph.vertex_count()), false) {}

  void run(int root) {
    struct frame {
      int v;
      std::size_t child;
    };
    std::vector<frame> frames;
    frames.push_back({root, 0});
    index[root] = lowlink[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = true;

    while (!frames.empty()) {
      auto& f = frames.back();
      const auto& row = g.out(f.v);
      if (f.child < row.size()) {
        int w = row[f.child++];
        if (index[w] < 0) {
          index[w] = lowlink[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = true;
          frames.push_back({w, 0});
        } else if (on_stack[w]) {
          lowlink[f.v] = std::min(lowlink[f.v], index[w]);
        }
      } else {
        int v = f.v;
        frames.pop_back();
        if (!frames.empty())
          lowlink[frames.back().v] = std::min(lowlink[frames.back().v], lowlink[v]);
        if (lowlink[v] == index[v]) {
          while (true) {
            int w = stack.back();
            stack.pop_back();
            on_stack[w] = false;
            comp[w] = comp_count;
            if (w == v) break;
          }
          ++comp_count;
        }
      }
    }
  }
};

}  // namespace

condensation scc_condensation(const digraph& g) {
  const int n = g.vertex_count();
  tarjan_state t(g);
  for (int v = 0; v < n; ++v)
    if (t.index[v] < 0) t.run(v);

  const int k = t.comp_count;
  condensation c;
  c.comp_of.resize(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) c.comp_of[static_cast<std::size_t>(v)] = k - 1 - t.comp[v];

  c.members.resize(static_cast<std::size_t>(k));
  for (int v = 0; v < n; ++v) c.members[static_cast<std::size_t>(c.comp_of[v])].push_back(v);

  c.dag = digraph(k);
  for (int u = 0; u < n; ++u)
    for (int v : g.out(u))
      if (c.comp_of[u] != c.comp_of[v]) c.dag.add_arc(c.comp_of[u], c.comp_of[v]);
  return c;
}

bool is_acyclic(const digraph& g) {
  condensation c = scc_condensation(g);
  for (const auto& m : c.members)
    if (m.size() > 1) return false;
  return true;
}

namespace {

// Any directed cycle, found by DFS back edge. Deterministic: vertices and
// neighbors are scanned in ascending order.
std::optional<std::vector<int>> find_any_cycle(const digraph& g) {
  const int n = g.vertex_count();
  enum : char { white, gray, black };
  std::vector<char> color(static_cast<std::size_t>(n), white);
  std::vector<int> path;
  std::vector<std::size_t> child;

  for (int root = 0; root < n; ++root) {
    if (color[root] != white) continue;
    path.clear();
    child.clear();
    path.push_back(root);
    child.push_back(0);
    color[root] = gray;
    while (!path.empty()) {
      int v = path.back();
      const auto& row = g.out(v);
      if (child.back() < row.size()) {
        int w = row[child.back()++];
        if (color[w] == gray) {
          auto it = std::find(path.begin(), path.end(), w);
          return std::vector<int>(it, path.end());
        }
        if (color[w] == white) {
          color[w] = gray;
          path.push_back(w);
          child.push_back(0);
        }
      } else {
        color[v] = black;
        path.pop_back();
        child.pop_back();
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<cycle_path> find_chordless_cycle(const digraph& g) {
  auto cyc = find_any_cycle(g);
  if (!cyc) return std::nullopt;

  std::vector<int> pos(static_cast<std::size_t>(g.vertex_count()), -1);
  bool changed = true;
  while (changed) {
    changed = false;
    const int len = static_cast<int>(cyc->size());
    if (len <= 2) break;
    for (int i = 0; i < len; ++i) pos[static_cast<std::size_t>((*cyc)[i])] = i;
    for (int a = 0; a < len && !changed; ++a) {
      for (int y : g.out((*cyc)[a])) {
        int b = pos[static_cast<std::size_t>(y)];
        if (b < 0 || b == (a + 1) % len) continue;
        // Arc (cyc[a], cyc[b]) skips at least one vertex: close the shorter
        // cycle cyc[b], cyc[b+1], ..., cyc[a].
        std::vector<int> shorter;
        for (int p = b; p != a; p = (p + 1) % len) shorter.push_back((*cyc)[p]);
        shorter.push_back((*cyc)[a]);
        for (int v : *cyc) pos[static_cast<std::size_t>(v)] = -1;
        *cyc = std::move(shorter);
        changed = true;
        break;
      }
    }
    if (!changed)
      for (int v : *cyc) pos[static_cast<std::size_t>(v)] = -1;
  }
  return cycle_path{std::move(*cyc), true};
}

cycle_path find_short_path(const digraph& dag, int target_len) {
  if (target_len < 1) throw std::invalid_argument("find_short_path: target_len must be >= 1");
  const int n = dag.vertex_count();
  if (n == 0) return {};

  std::vector<int> dist(static_cast<std::size_t>(n));
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::vector<int> best_path;
  int best_dist = -1;

  std::vector<int> queue;
  for (int src = 0; src < n; ++src) {
    std::fill(dist.begin(), dist.end(), -1);
    std::fill(parent.begin(), parent.end(), -1);
    queue.clear();
    queue.push_back(src);
    dist[static_cast<std::size_t>(src)] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      int u = queue[head];
      for (int w : dag.out(u)) {
        if (dist[static_cast<std::size_t>(w)] >= 0) continue;
        dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
        parent[static_cast<std::size_t>(w)] = u;
        queue.push_back(w);
      }
    }
    auto rebuild = [&](int dst) {
      std::vector<int> p;
      for (int v = dst; v >= 0; v = parent[static_cast<std::size_t>(v)]) p.push_back(v);
      std::reverse(p.begin(), p.end());
      return p;
    };
    for (int dst = 0; dst < n; ++dst) {
      int d = dist[static_cast<std::size_t>(dst)];
      if (d == target_len - 1) return cycle_path{rebuild(dst), false};
      if (d > best_dist) {
        best_dist = d;
        best_path = rebuild(dst);
      }
    }
  }
  return cycle_path{std::move(best_path), false};
}

digraph transitive_closure(const digraph& g) {
  const int n = g.vertex_count();
  digraph tc(n);
  std::vector<bool> seen(static_cast<std::size_t>(n));
  std::vector<int> queue;
  for (int src = 0; src < n; ++src) {
    std::fill(seen.begin(), seen.end(), false);
    queue.clear();
    queue.push_back(src);
    seen[static_cast<std::size_t>(src)] = true;
    for (std::size_t head = 0; head < queue.size(); ++head)
      for (int w : g.out(queue[head]))
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = true;
          tc.add_arc(src, w);
          queue.push_back(w);
        }
  }
  return tc;
}

std::vector<std::vector<int>> weak_components(const digraph& g) {
  const int n = g.vertex_count();
  std::vector<std::vector<int>> undirected(static_cast<std::size_t>(n));
  for (int u = 0; u < n; ++u)
    for (int v : g.out(u)) {
      undirected[static_cast<std::size_t>(u)].push_back(v);
      undirected[static_cast<std::size_t>(v)].push_back(u);
    }

  std::vector<std::vector<int>> comps;
  std::vector<bool> seen(static_cast<std::size_t>(n));
  std::vector<int> queue;
  for (int root = 0; root < n; ++root) {
    if (seen[static_cast<std::size_t>(root)]) continue;
    queue.clear();
    queue.push_back(root);
    seen[static_cast<std::size_t>(root)] = true;
    for (std::size_t head = 0; head < queue.size(); ++head)
      for (int w : undirected[static_cast<std::size_t>(queue[head])])
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = true;
          queue.push_back(w);
        }
    std::sort(queue.begin(), queue.end());
    comps.push_back(queue);
  }
  return comps;
}

bool is_independent(const digraph& g, std::span<const int> s) {
  std::vector<bool> in_s(static_cast<std::size_t>(g.vertex_count()));
  for (int v : s) in_s[static_cast<std::size_t>(v)] = true;
  for (int u : s)
    for (int w : g.out(u))
      if (in_s[static_cast<std::size_t>(w)] && w != u) return false;
  return true;
}

bool is_antichain(const digraph& g, std::span<const int> s) {
  const int n = g.vertex_count();
  std::vector<bool> in_s(static_cast<std::size_t>(n));
  for (int v : s) in_s[static_cast<std::size_t>(v)] = true;

  std::vector<bool> seen(static_cast<std::size_t>(n));
  std::vector<int> queue;
  for (int src : s) {
    std::fill(seen.begin(), seen.end(), false);
    queue.clear();
    queue.push_back(src);
    seen[static_cast<std::size_t>(src)] = true;
    for (std::size_t head = 0; head < queue.size(); ++head)
      for (int w : g.out(queue[head])) {
        if (seen[static_cast<std::size_t>(w)]) continue;
        if (in_s[static_cast<std::size_t>(w)] && w != src) return false;
        seen[static_cast<std::size_t>(w)] = true;
        queue.push_back(w);
      }
  }
  return true;
}

}  // namespace ammd

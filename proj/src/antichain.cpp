#include "ammd/antichain.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <stdexcept>

namespace ammd {

int flow_network::add_arc(int tail, int head, std::int64_t lower, std::int64_t capacity) {
  if (lower < 0 || lower > capacity)
    throw std::invalid_argument("flow_network: need 0 <= lower <= capacity");
  arcs_.push_back({tail, head, lower, capacity, 0});
  return static_cast<int>(arcs_.size()) - 1;
}

bool flow_network::flow_feasible() const {
  std::vector<std::int64_t> balance(static_cast<std::size_t>(nodes_), 0);
  for (const auto& a : arcs_) {
    if (a.flow < a.lower || a.flow > a.capacity) return false;
    balance[static_cast<std::size_t>(a.tail)] -= a.flow;
    balance[static_cast<std::size_t>(a.head)] += a.flow;
  }
  for (int v = 0; v < nodes_; ++v)
    if (v != source_ && v != sink_ && balance[static_cast<std::size_t>(v)] != 0) return false;
  return true;
}

std::int64_t flow_network::flow_value() const {
  std::int64_t value = 0;
  for (const auto& a : arcs_) {
    if (a.tail == source_) value += a.flow;
    if (a.head == source_) value -= a.flow;
  }
  return value;
}

namespace {

struct dinic {
  struct edge {
    int to;
    std::int64_t cap;
    int rev;
  };

  std::vector<std::vector<edge>> graph;
  std::vector<int> level, iter;

  explicit dinic(int n) : graph(static_cast<std::size_t>(n)), level(static_cast<std::size_t>(n)), iter(static_cast<std::size_t>(n)) {}

  // Returns the index of the forward edge within graph[u].
  int add_edge(int u, int v, std::int64_t cap, std::int64_t back_cap = 0) {
    auto& gu = graph[static_cast<std::size_t>(u)];
    auto& gv = graph[static_cast<std::size_t>(v)];
    int iu = static_cast<int>(gu.size());
    int iv = static_cast<int>(gv.size()) + (u == v ? 1 : 0);
    gu.push_back({v, cap, iv});
    gv.push_back({u, back_cap, iu});
    return iu;
  }

  bool bfs(int s, int t) {
    std::fill(level.begin(), level.end(), -1);
    std::vector<int> queue{s};
    level[static_cast<std::size_t>(s)] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      int u = queue[head];
      for (const auto& e : graph[static_cast<std::size_t>(u)])
        if (e.cap > 0 && level[static_cast<std::size_t>(e.to)] < 0) {
          level[static_cast<std::size_t>(e.to)] = level[static_cast<std::size_t>(u)] + 1;
          queue.push_back(e.to);
        }
    }
    return level[static_cast<std::size_t>(t)] >= 0;
  }

  std::int64_t dfs(int u, int t, std::int64_t limit) {
    if (u == t) return limit;
    for (int& i = iter[static_cast<std::size_t>(u)]; i < static_cast<int>(graph[static_cast<std::size_t>(u)].size()); ++i) {
      edge& e = graph[static_cast<std::size_t>(u)][static_cast<std::size_t>(i)];
      if (e.cap <= 0 || level[static_cast<std::size_t>(e.to)] != level[static_cast<std::size_t>(u)] + 1) continue;
      std::int64_t pushed = dfs(e.to, t, std::min(limit, e.cap));
      if (pushed > 0) {
        e.cap -= pushed;
        graph[static_cast<std::size_t>(e.to)][static_cast<std::size_t>(e.rev)].cap += pushed;
        return pushed;
      }
    }
    return 0;
  }

  std::int64_t run(int s, int t) {
    if (s == t) return 0;
    std::int64_t total = 0;
    while (bfs(s, t)) {
      std::fill(iter.begin(), iter.end(), 0);
      while (std::int64_t pushed = dfs(s, t, std::numeric_limits<std::int64_t>::max()))
        total += pushed;
    }
    return total;
  }
};

}  // namespace

std::int64_t max_flow(flow_network& net, int s, int t) {
  dinic d(net.node_count());
  std::vector<int> idx(net.arc_count());
  for (std::size_t i = 0; i < net.arc_count(); ++i) {
    const auto& a = net.arc(i);
    if (a.lower != 0) throw std::invalid_argument("max_flow: arcs must have zero lower bounds");
    idx[i] = d.add_edge(a.tail, a.head, a.capacity);
  }
  std::int64_t value = d.run(s, t);
  for (std::size_t i = 0; i < net.arc_count(); ++i) {
    const auto& a = net.arc(i);
    net.set_flow(i, a.capacity - d.graph[static_cast<std::size_t>(a.tail)][static_cast<std::size_t>(idx[i])].cap);
  }
  return value;
}

namespace {

bool establish_feasible_flow(flow_network& net, int s, int t) {
  const int n = net.node_count();
  const int aux_s = n, aux_t = n + 1;
  dinic d(n + 2);
  std::vector<int> idx(net.arc_count());
  std::int64_t total_demand = 0;
  for (std::size_t i = 0; i < net.arc_count(); ++i) {
    const auto& a = net.arc(i);
    idx[i] = d.add_edge(a.tail, a.head, a.capacity - a.lower);
    if (a.lower > 0) {
      d.add_edge(aux_s, a.head, a.lower);
      d.add_edge(a.tail, aux_t, a.lower);
      total_demand += a.lower;
    }
  }
  d.add_edge(t, s, flow_network::unbounded);
  if (d.run(aux_s, aux_t) < total_demand) return false;
  for (std::size_t i = 0; i < net.arc_count(); ++i) {
    const auto& a = net.arc(i);
    std::int64_t used = (a.capacity - a.lower) -
                        d.graph[static_cast<std::size_t>(a.tail)][static_cast<std::size_t>(idx[i])].cap;
    net.set_flow(i, a.lower + used);
  }
  return true;
}

}  // namespace

std::optional<std::int64_t> min_flow_with_demands(flow_network& net, int s, int t) {
  if (!net.flow_feasible() && !establish_feasible_flow(net, s, t)) return std::nullopt;

  dinic d(net.node_count());
  std::vector<int> idx(net.arc_count());
  for (std::size_t i = 0; i < net.arc_count(); ++i) {
    const auto& a = net.arc(i);
    idx[i] = d.add_edge(a.tail, a.head, a.capacity - a.flow, a.flow - a.lower);
  }
  d.run(t, s);
  for (std::size_t i = 0; i < net.arc_count(); ++i) {
    const auto& a = net.arc(i);
    std::int64_t remaining = d.graph[static_cast<std::size_t>(a.tail)][static_cast<std::size_t>(idx[i])].cap;
    net.set_flow(i, a.capacity - remaining);
  }
  assert(net.flow_feasible());
  return net.flow_value();
}

flow_network build_ma_network(const digraph& dag) {
  if (!is_acyclic(dag)) throw std::invalid_argument("build_ma_network: input must be acyclic");
  const int n = dag.vertex_count();
  const int s = 2 * n, t = 2 * n + 1;
  flow_network net(2 * n + 2, s, t);
  for (int v = 0; v < n; ++v) net.add_arc(s, v, 0, flow_network::unbounded);
  for (int v = 0; v < n; ++v) net.add_arc(v, n + v, 1, flow_network::unbounded);
  for (int v = 0; v < n; ++v) net.add_arc(n + v, t, 0, flow_network::unbounded);
  for (int u = 0; u < n; ++u)
    for (int v : dag.out(u)) net.add_arc(n + u, v, 0, flow_network::unbounded);
  return net;
}

antichain_result max_antichain(const digraph& dag) {
  const int n = dag.vertex_count();
  antichain_result result;
  if (n == 0) return result;

  flow_network net = build_ma_network(dag);
  // One unit along s -> v_in -> v_out -> t per vertex is always feasible.
  for (std::size_t i = 0; i < static_cast<std::size_t>(3 * n); ++i) net.set_flow(i, 1);

  auto value = min_flow_with_demands(net, net.source(), net.sink());
  if (!value) throw std::logic_error("max_antichain: seeded flow was not feasible");

  // Nodes residual-reachable from the sink form the sink side of a tight
  // cut; the demand arcs crossing into it are the antichain.
  std::vector<std::vector<int>> residual(static_cast<std::size_t>(net.node_count()));
  for (std::size_t i = 0; i < net.arc_count(); ++i) {
    const auto& a = net.arc(i);
    if (a.capacity - a.flow > 0) residual[static_cast<std::size_t>(a.tail)].push_back(a.head);
    if (a.flow - a.lower > 0) residual[static_cast<std::size_t>(a.head)].push_back(a.tail);
  }
  std::vector<bool> reach(static_cast<std::size_t>(net.node_count()), false);
  std::vector<int> queue{net.sink()};
  reach[static_cast<std::size_t>(net.sink())] = true;
  for (std::size_t head = 0; head < queue.size(); ++head)
    for (int w : residual[static_cast<std::size_t>(queue[head])])
      if (!reach[static_cast<std::size_t>(w)]) {
        reach[static_cast<std::size_t>(w)] = true;
        queue.push_back(w);
      }

  for (int v = 0; v < n; ++v)
    if (reach[static_cast<std::size_t>(n + v)] && !reach[static_cast<std::size_t>(v)])
      result.members.push_back(v);

  if (static_cast<std::int64_t>(result.members.size()) != *value)
    throw std::logic_error("max_antichain: cut extraction disagrees with the min-flow value");

#ifdef AMMD_SELF_VERIFY
  if (!is_antichain(dag, result.members))
    throw std::logic_error("max_antichain: extracted set is not an antichain");
  if (max_antichain_oracle(dag).size() != result.members.size())
    throw std::logic_error("max_antichain: size differs from the matching oracle");
  result.certificate.assign(result.members.size(), 1);
#endif
  return result;
}

int hopcroft_karp(const std::vector<std::vector<int>>& adj, int right_count,
                  std::vector<int>* match_left, std::vector<int>* match_right) {
  const int nl = static_cast<int>(adj.size());
  std::vector<int> ml(static_cast<std::size_t>(nl), -1), mr(static_cast<std::size_t>(right_count), -1);
  std::vector<int> dist(static_cast<std::size_t>(nl));
  const int inf = std::numeric_limits<int>::max();

  auto bfs = [&]() {
    std::vector<int> queue;
    for (int u = 0; u < nl; ++u) {
      if (ml[static_cast<std::size_t>(u)] < 0) {
        dist[static_cast<std::size_t>(u)] = 0;
        queue.push_back(u);
      } else {
        dist[static_cast<std::size_t>(u)] = inf;
      }
    }
    bool found = false;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      int u = queue[head];
      for (int r : adj[static_cast<std::size_t>(u)]) {
        int w = mr[static_cast<std::size_t>(r)];
        if (w < 0) {
          found = true;
        } else if (dist[static_cast<std::size_t>(w)] == inf) {
          dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
          queue.push_back(w);
        }
      }
    }
    return found;
  };

  std::function<bool(int)> dfs = [&](int u) {
    for (int r : adj[static_cast<std::size_t>(u)]) {
      int w = mr[static_cast<std::size_t>(r)];
      if (w < 0 || (dist[static_cast<std::size_t>(w)] == dist[static_cast<std::size_t>(u)] + 1 && dfs(w))) {
        ml[static_cast<std::size_t>(u)] = r;
        mr[static_cast<std::size_t>(r)] = u;
        return true;
      }
    }
    dist[static_cast<std::size_t>(u)] = inf;
    return false;
  };

  int matching = 0;
  while (bfs())
    for (int u = 0; u < nl; ++u)
      if (ml[static_cast<std::size_t>(u)] < 0 && dfs(u)) ++matching;

  if (match_left) *match_left = std::move(ml);
  if (match_right) *match_right = std::move(mr);
  return matching;
}

antichain_result max_antichain_oracle(const digraph& dag) {
  if (!is_acyclic(dag)) throw std::invalid_argument("max_antichain_oracle: input must be acyclic");
  const int n = dag.vertex_count();
  antichain_result result;
  if (n == 0) return result;

  digraph tc = transitive_closure(dag);
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  for (int u = 0; u < n; ++u) adj[static_cast<std::size_t>(u)] = tc.out(u);

  std::vector<int> ml, mr;
  int matching = hopcroft_karp(adj, n, &ml, &mr);

  // Konig: alternating reachability from exposed left vertices. The cover is
  // (L \ Z_L) + (R & Z_R); vertices with left copy in Z_L and right copy
  // outside Z_R form a maximum antichain.
  std::vector<bool> in_l(static_cast<std::size_t>(n), false), in_r(static_cast<std::size_t>(n), false);
  std::vector<int> queue;
  for (int u = 0; u < n; ++u)
    if (ml[static_cast<std::size_t>(u)] < 0) {
      in_l[static_cast<std::size_t>(u)] = true;
      queue.push_back(u);
    }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    int u = queue[head];
    for (int r : adj[static_cast<std::size_t>(u)]) {
      if (r == ml[static_cast<std::size_t>(u)] || in_r[static_cast<std::size_t>(r)]) continue;
      in_r[static_cast<std::size_t>(r)] = true;
      int w = mr[static_cast<std::size_t>(r)];
      if (w >= 0 && !in_l[static_cast<std::size_t>(w)]) {
        in_l[static_cast<std::size_t>(w)] = true;
        queue.push_back(w);
      }
    }
  }

  for (int v = 0; v < n; ++v)
    if (in_l[static_cast<std::size_t>(v)] && !in_r[static_cast<std::size_t>(v)])
      result.members.push_back(v);

  if (static_cast<int>(result.members.size()) != n - matching)
    throw std::logic_error("max_antichain_oracle: cover complement has unexpected size");

#ifdef AMMD_SELF_VERIFY
  if (!is_antichain(dag, result.members))
    throw std::logic_error("max_antichain_oracle: extracted set is not an antichain");
  result.certificate.assign(result.members.size(), 1);
#endif
  return result;
}

}  // namespace ammd

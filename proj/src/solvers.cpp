#include "ammd/solvers.hpp"

#include <algorithm>

namespace ammd {

namespace {

struct clique_searcher {
  const undirected_graph& g;
  const int k;
  std::optional<std::chrono::steady_clock::time_point> deadline;
  long ticker = 0;
  bool timed_out = false;
  std::vector<int> current;
  std::vector<int> found;

  bool out_of_time() {
    if (!deadline || timed_out) return timed_out;
    if ((++ticker & 0x3ff) == 0 && std::chrono::steady_clock::now() >= *deadline) timed_out = true;
    return timed_out;
  }

  // Candidates arrive in ascending id order. Returns true once a k-clique is
  // completed; the loop processes highest greedy color first so the bound
  // |current| + color can cut the whole remainder.
  bool expand(const std::vector<int>& cand) {
    if (static_cast<int>(current.size()) == k) {
      found = current;
      return true;
    }
    if (static_cast<int>(current.size() + cand.size()) < k || out_of_time()) return false;

    const int cn = static_cast<int>(cand.size());
    std::vector<int> color(static_cast<std::size_t>(cn));
    std::vector<std::vector<int>> classes;
    for (int i = 0; i < cn; ++i) {
      int v = cand[static_cast<std::size_t>(i)];
      std::size_t c = 0;
      for (; c < classes.size(); ++c) {
        bool clash = false;
        for (int u : classes[c])
          if (g.has_edge(u, v)) {
            clash = true;
            break;
          }
        if (!clash) break;
      }
      if (c == classes.size()) classes.emplace_back();
      classes[c].push_back(v);
      color[static_cast<std::size_t>(i)] = static_cast<int>(c) + 1;
    }

    std::vector<int> order(static_cast<std::size_t>(cn));
    for (int i = 0; i < cn; ++i) order[static_cast<std::size_t>(i)] = i;
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
      return color[static_cast<std::size_t>(x)] < color[static_cast<std::size_t>(y)];
    });

    std::vector<int> sub;
    for (int pos = cn - 1; pos >= 0; --pos) {
      const int idx = order[static_cast<std::size_t>(pos)];
      const int v = cand[static_cast<std::size_t>(idx)];
      if (static_cast<int>(current.size()) + color[static_cast<std::size_t>(idx)] < k) return false;
      if (out_of_time()) return false;

      sub.clear();
      for (int q = 0; q < pos; ++q) {
        int u = cand[static_cast<std::size_t>(order[static_cast<std::size_t>(q)])];
        if (g.has_edge(u, v)) sub.push_back(u);
      }
      std::sort(sub.begin(), sub.end());
      current.push_back(v);
      if (expand(sub)) return true;
      current.pop_back();
    }
    return false;
  }
};

}  // namespace

clique_search k_clique(const undirected_graph& g, int k,
                       std::optional<std::chrono::steady_clock::time_point> deadline) {
  clique_search result;
  if (k < 1) throw std::invalid_argument("k_clique: k must be at least 1");
  const int n = g.size();
  if (k > n) return result;
  if (k == 1) {
    result.outcome = clique_search::status::found;
    result.clique = {0};
    return result;
  }

  // Peel vertices that cannot be in any k-clique.
  std::vector<int> degree(static_cast<std::size_t>(n), 0);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (g.has_edge(u, v)) {
        ++degree[static_cast<std::size_t>(u)];
        ++degree[static_cast<std::size_t>(v)];
      }
  std::vector<bool> alive(static_cast<std::size_t>(n), true);
  std::vector<int> peel;
  for (int v = 0; v < n; ++v)
    if (degree[static_cast<std::size_t>(v)] < k - 1) peel.push_back(v);
  for (std::size_t head = 0; head < peel.size(); ++head) {
    int v = peel[head];
    if (!alive[static_cast<std::size_t>(v)]) continue;
    alive[static_cast<std::size_t>(v)] = false;
    for (int u = 0; u < n; ++u)
      if (alive[static_cast<std::size_t>(u)] && g.has_edge(u, v) &&
          --degree[static_cast<std::size_t>(u)] < k - 1)
        peel.push_back(u);
  }

  std::vector<int> cand;
  for (int v = 0; v < n; ++v)
    if (alive[static_cast<std::size_t>(v)]) cand.push_back(v);
  if (static_cast<int>(cand.size()) < k) return result;

  clique_searcher searcher{g, k, deadline};
  if (searcher.expand(cand)) {
    result.outcome = clique_search::status::found;
    result.clique = std::move(searcher.found);
    std::sort(result.clique.begin(), result.clique.end());
  } else if (searcher.timed_out) {
    result.outcome = clique_search::status::timed_out;
  }
  return result;
}

}  // namespace ammd

#include "ammd/generate.hpp"

#include <cmath>
#include <set>
#include <stdexcept>

#include "ammd/random_util.hpp"

namespace ammd {

namespace {

// Weighted pick with integer weights degree*1000 + round(delta*1000) per
// vertex; integer arithmetic keeps the draw portable.
int preferential_pick(std::mt19937_64& rng, const std::vector<std::int64_t>& degree,
                      std::int64_t delta_milli) {
  std::int64_t total = 0;
  for (std::int64_t d : degree) total += d * 1000 + delta_milli;
  if (total <= 0) return 0;
  std::int64_t r = static_cast<std::int64_t>(detail::draw_below(rng, static_cast<std::uint64_t>(total)));
  for (std::size_t v = 0; v < degree.size(); ++v) {
    r -= degree[v] * 1000 + delta_milli;
    if (r < 0) return static_cast<int>(v);
  }
  return static_cast<int>(degree.size()) - 1;
}

}  // namespace

weighted_digraph<std::int64_t> scale_free_digraph(const scale_free_params& p) {
  if (p.n < 2) throw std::invalid_argument("scale_free_digraph: need n >= 2");
  if (p.alpha + p.gamma <= 0)
    throw std::invalid_argument("scale_free_digraph: alpha + gamma must be positive");

  const std::int64_t a_milli = std::llround(p.alpha * 1000);
  const std::int64_t b_milli = std::llround(p.beta * 1000);
  const std::int64_t g_milli = std::llround(p.gamma * 1000);
  const std::int64_t total_milli = a_milli + b_milli + g_milli;
  if (total_milli <= 0) throw std::invalid_argument("scale_free_digraph: probabilities sum to zero");
  const std::int64_t din_milli = std::llround(p.delta_in * 1000);
  const std::int64_t dout_milli = std::llround(p.delta_out * 1000);

  std::mt19937_64 rng(p.seed);
  std::set<std::pair<int, int>> arcs{{0, 1}};
  std::vector<std::int64_t> in_deg{0, 1}, out_deg{1, 0};

  auto add_arc = [&](int u, int v) {
    if (u == v) return;
    if (arcs.insert({u, v}).second) {
      ++out_deg[static_cast<std::size_t>(u)];
      ++in_deg[static_cast<std::size_t>(v)];
    }
  };

  while (static_cast<int>(in_deg.size()) < p.n) {
    std::int64_t roll = static_cast<std::int64_t>(
        detail::draw_below(rng, static_cast<std::uint64_t>(total_milli)));
    if (roll < a_milli) {
      int w = preferential_pick(rng, in_deg, din_milli);
      in_deg.push_back(0);
      out_deg.push_back(0);
      add_arc(static_cast<int>(in_deg.size()) - 1, w);
    } else if (roll < a_milli + b_milli) {
      int u = preferential_pick(rng, out_deg, dout_milli);
      int w = preferential_pick(rng, in_deg, din_milli);
      add_arc(u, w);
    } else {
      int u = preferential_pick(rng, out_deg, dout_milli);
      in_deg.push_back(0);
      out_deg.push_back(0);
      add_arc(u, static_cast<int>(in_deg.size()) - 1);
    }
  }

  weighted_digraph<std::int64_t> g;
  g.n = p.n;
  for (auto [u, v] : arcs) {
    g.arcs.push_back({u, v, 1});
    if (!arcs.count({v, u})) g.arcs.push_back({v, u, 1});
  }
  return g;
}

weighted_digraph<std::int64_t> random_complete_digraph(int n, std::int64_t max_weight,
                                                       std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("random_complete_digraph: need n >= 1");
  if (max_weight < 1) throw std::invalid_argument("random_complete_digraph: need max_weight >= 1");
  std::mt19937_64 rng(seed);
  weighted_digraph<std::int64_t> g;
  g.n = n;
  g.arcs.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1));
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      if (u == v) continue;
      std::int64_t w = 1 + static_cast<std::int64_t>(
                               detail::draw_below(rng, static_cast<std::uint64_t>(max_weight)));
      g.arcs.push_back({u, v, w});
    }
  return g;
}

}  // namespace ammd

#pragma once

#include <cstdint>

#include "ammd/metric_space.hpp"

namespace ammd {

/// Parameters of the directed preferential-attachment growth model. Each
/// step either adds a vertex with an outgoing arc (alpha), adds an arc
/// between existing vertices (beta), or adds a vertex with an incoming arc
/// (gamma); targets are drawn proportionally to in-degree + delta_in and
/// sources to out-degree + delta_out. Defaults follow common web-graph
/// settings and can be overridden per run.
struct scale_free_params {
  int n = 100;
  double alpha = 0.41;
  double beta = 0.54;
  double gamma = 0.05;
  double delta_in = 0.2;
  double delta_out = 0.0;
  std::uint64_t seed = 1;
};

/// Grows the model to n vertices, then adds the reverse of every arc so the
/// digraph is strongly connected. Unit arc weights.
weighted_digraph<std::int64_t> scale_free_digraph(const scale_free_params& p);

/// Complete digraph with independent uniform integer weights in [1, max_weight].
weighted_digraph<std::int64_t> random_complete_digraph(int n, std::int64_t max_weight,
                                                       std::uint64_t seed);

}  // namespace ammd

#pragma once

#include <cstdint>
#include <random>

namespace ammd::detail {

/// Bounded draw with plain modulo. The slight bias is irrelevant for the
/// workloads here; what matters is that results are identical across
/// platforms, which std::uniform_int_distribution does not guarantee.
inline std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound) { return rng() % bound; }

}  // namespace ammd::detail
